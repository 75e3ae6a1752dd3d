// Copyright 2026 The GameKit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEKIT_ITERATED_HPP_
#define GAMEKIT_ITERATED_HPP_

// Repeated symmetric 2x2 games between history-based strategy automata.

#include <cctype>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamekit/bimatrix.hpp"
#include "gamekit/text.hpp"

namespace gamekit {

enum class Move : std::uint8_t { kC = 0, kD = 1 };  // strategy index in the 2x2 game

inline char to_char(Move m) { return m == Move::kC ? 'C' : 'D'; }

using Rng = std::mt19937_64;

// Decides the next move from both players' histories (rounds already played).
// Deterministic automata never touch the generator.
class StrategyAutomaton {
 public:
  using Rule = std::function<Move(std::span<const Move> own, std::span<const Move> opp, Rng&)>;

  StrategyAutomaton(std::string name, bool deterministic, Rule rule)
      : name_(std::move(name)), deterministic_(deterministic), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  bool deterministic() const { return deterministic_; }
  Move decide(std::span<const Move> own, std::span<const Move> opp, Rng& rng) const {
    return rule_(own, opp, rng);
  }

 private:
  std::string name_;
  bool deterministic_;
  Rule rule_;
};

namespace strategies {

inline StrategyAutomaton always_c() {
  return {"AlwaysC", true, [](auto, auto, Rng&) { return Move::kC; }};
}

inline StrategyAutomaton always_d() {
  return {"AlwaysD", true, [](auto, auto, Rng&) { return Move::kD; }};
}

inline StrategyAutomaton tit_for_tat() {
  return {"TitForTat", true, [](std::span<const Move>, std::span<const Move> opp, Rng&) {
            return opp.empty() ? Move::kC : opp.back();
          }};
}

inline StrategyAutomaton grim_trigger() {
  return {"GrimTrigger", true, [](std::span<const Move>, std::span<const Move> opp, Rng&) {
            for (Move m : opp)
              if (m == Move::kD) return Move::kD;
            return Move::kC;
          }};
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_draw(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Cooperates with probability p each round.
inline StrategyAutomaton random_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("RandomP probability must lie in [0, 1]");
  return {"RandomP(" + text::sig6(p) + ")", false,
          [p](auto, auto, Rng& rng) { return unit_draw(rng) < p ? Move::kC : Move::kD; }};
}

// Names: AlwaysC (allc), AlwaysD (alld), TitForTat (tft), GrimTrigger (grim),
// RandomP(p) / random:p. Case-insensitive.
inline StrategyAutomaton from_name(std::string_view name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "alwaysc" || key == "allc") return always_c();
  if (key == "alwaysd" || key == "alld") return always_d();
  if (key == "titfortat" || key == "tft") return tit_for_tat();
  if (key == "grimtrigger" || key == "grim") return grim_trigger();
  std::string_view arg;
  if (key.starts_with("random:")) {
    arg = std::string_view(key).substr(7);
  } else if ((key.starts_with("randomp(") || key.starts_with("random(")) && key.ends_with(")")) {
    auto open = key.find('(');
    arg = std::string_view(key).substr(open + 1, key.size() - open - 2);
  } else {
    throw ParseError("unknown strategy '" + std::string(name) +
                     "' (known: AlwaysC, AlwaysD, TitForTat, GrimTrigger, RandomP(p))");
  }
  auto p = text::to_double(arg);
  if (!p) throw ParseError("bad RandomP probability in '" + std::string(name) + "'");
  return random_p(*p);
}

}  // namespace strategies

struct MatchTranscript {
  BimatrixGame game;
  std::size_t rounds = 0;
  std::vector<std::pair<Move, Move>> moves;
  std::pair<double, double> scores{0.0, 0.0};
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

inline void require_symmetric_2x2(const BimatrixGame& g) {
  if (g.rows() != 2 || g.cols() != 2 || !is_symmetric(g))
    throw DomainError("iterated play needs a symmetric 2x2 game");
}

}  // namespace detail

// Simultaneous moves each round; both players see the full history of earlier
// rounds. Player k draws from its own generator seeded from (seed, k).
inline MatchTranscript play_match(const StrategyAutomaton& s1, const StrategyAutomaton& s2,
                                  const BimatrixGame& g, std::size_t rounds, std::uint64_t seed) {
  detail::require_symmetric_2x2(g);
  if (rounds == 0) throw DomainError("a match needs at least one round");
  Rng rng1(detail::derive_seed(seed, 1)), rng2(detail::derive_seed(seed, 2));
  std::vector<Move> h1, h2;
  h1.reserve(rounds);
  h2.reserve(rounds);
  MatchTranscript t{g, rounds, {}, {0.0, 0.0}};
  for (std::size_t k = 0; k < rounds; ++k) {
    const Move m1 = s1.decide(h1, h2, rng1);
    const Move m2 = s2.decide(h2, h1, rng2);
    const auto r = static_cast<std::size_t>(m1), c = static_cast<std::size_t>(m2);
    t.scores.first += g.row_payoffs()(r, c);
    t.scores.second += g.col_payoffs()(r, c);
    t.moves.emplace_back(m1, m2);
    h1.push_back(m1);
    h2.push_back(m2);
  }
  return t;
}

struct TournamentTable {
  std::vector<std::string> names;
  // scores[i][j]: what strategy i earned against strategy j. Self-play is a
  // single match whose first-seat score is recorded on the diagonal.
  std::vector<std::vector<double>> scores;
  std::vector<double> totals;
};

// Round robin over all unordered pairs including self-play. Each match has
// its own seed derived from (seed, i, j), so the table depends only on the
// inputs, not on match scheduling.
inline TournamentTable tournament(const std::vector<StrategyAutomaton>& players,
                                  const BimatrixGame& g, std::size_t rounds, std::uint64_t seed) {
  if (players.size() < 2) throw DomainError("a tournament needs at least two strategies");
  const std::size_t n = players.size();
  TournamentTable t;
  t.scores.assign(n, std::vector<double>(n, 0.0));
  t.totals.assign(n, 0.0);
  for (const auto& p : players) t.names.push_back(p.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto m = play_match(players[i], players[j], g, rounds,
                          detail::derive_seed(seed, (std::uint64_t{i} << 32) | j));
      t.scores[i][j] = m.scores.first;
      if (i != j) t.scores[j][i] = m.scores.second;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.totals[i] += t.scores[i][j];
  return t;
}

inline std::string format_table(const TournamentTable& t) {
  std::size_t name_w = 8;
  for (const auto& n : t.names) name_w = std::max(name_w, n.size());
  std::size_t col_w = 5;
  for (const auto& n : t.names) col_w = std::max(col_w, n.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_w)) << "strategy";
  for (const auto& n : t.names) out << "  " << std::right << std::setw(static_cast<int>(col_w)) << n;
  out << "  " << std::setw(static_cast<int>(col_w)) << "total" << '\n';
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(name_w)) << t.names[i];
    for (double s : t.scores[i])
      out << "  " << std::right << std::setw(static_cast<int>(col_w)) << text::sig6(s);
    out << "  " << std::setw(static_cast<int>(col_w)) << text::sig6(t.totals[i]) << '\n';
  }
  return out.str();
}

inline std::string format_csv(const TournamentTable& t) {
  std::ostringstream out;
  out << "strategy";
  for (const auto& n : t.names) out << ',' << n;
  out << ",total\n";
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    out << t.names[i];
    for (double s : t.scores[i]) out << ',' << text::sig6(s);
    out << ',' << text::sig6(t.totals[i]) << '\n';
  }
  return out.str();
}

}  // namespace gamekit

#endif  // GAMEKIT_ITERATED_HPP_
