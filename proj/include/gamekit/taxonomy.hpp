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

#ifndef GAMEKIT_TAXONOMY_HPP_
#define GAMEKIT_TAXONOMY_HPP_

// Ordinal classification of symmetric 2x2 games laid out as
//
//            C        D
//   C   ( R , R )  ( S , T )
//   D   ( T , S )  ( P , P )
//
// and builders for the named example games.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gamekit/bimatrix.hpp"

namespace gamekit {

struct SymmetricOrdering {
  double T = 0, R = 0, S = 0, P = 0;

  BimatrixGame to_game() const {
    Matrix a{{R, S}, {T, P}};
    Matrix b = a.transposed();
    return BimatrixGame(std::move(a), std::move(b), {"C", "D"}, {"C", "D"});
  }
};

enum class GameKind { kLeader, kBattleOfSexes, kChicken, kPrisonersDilemma, kTrivialPure, kDegenerate };

inline const char* to_string(GameKind k) {
  switch (k) {
    case GameKind::kLeader: return "Leader";
    case GameKind::kBattleOfSexes: return "BattleOfSexes";
    case GameKind::kChicken: return "Chicken";
    case GameKind::kPrisonersDilemma: return "PrisonersDilemma";
    case GameKind::kTrivialPure: return "TrivialPure";
    case GameKind::kDegenerate: return "Degenerate";
  }
  return "?";
}

struct GameClass {
  GameKind kind = GameKind::kDegenerate;
  std::string ordering;  // e.g. "T>R>S>P"; ties written with '='
};

namespace detail {

inline std::string ordering_string(const SymmetricOrdering& o) {
  std::array<std::pair<double, char>, 4> v{{{o.T, 'T'}, {o.R, 'R'}, {o.S, 'S'}, {o.P, 'P'}}};
  std::stable_sort(v.begin(), v.end(), [](auto& l, auto& r) { return l.first > r.first; });
  std::string s(1, v[0].second);
  for (std::size_t i = 1; i < v.size(); ++i) {
    s += approx_equal(v[i - 1].first, v[i].first) ? '=' : '>';
    s += v[i].second;
  }
  return s;
}

}  // namespace detail

// Only the relative order of T, R, S, P matters. Battle of the Sexes is
// accepted as S>T>R>P and also as T>S>P>R, the order produced by
// canonical(NamedGame::kBattleOfSexes).
inline GameClass classify(const SymmetricOrdering& o) {
  GameClass gc;
  gc.ordering = detail::ordering_string(o);
  if (gc.ordering.find('=') != std::string::npos) {
    gc.kind = GameKind::kDegenerate;
  } else if (gc.ordering == "T>S>R>P") {
    gc.kind = GameKind::kLeader;
  } else if (gc.ordering == "S>T>R>P" || gc.ordering == "T>S>P>R") {
    gc.kind = GameKind::kBattleOfSexes;
  } else if (gc.ordering == "T>R>S>P") {
    gc.kind = GameKind::kChicken;
  } else if (gc.ordering == "T>R>P>S") {
    gc.kind = GameKind::kPrisonersDilemma;
  } else {
    gc.kind = GameKind::kTrivialPure;
  }
  return gc;
}

inline GameClass classify_game(const BimatrixGame& g) {
  if (g.rows() != 2 || g.cols() != 2)
    throw DomainError("not classifiable: only symmetric 2x2 games can be classified");
  if (!is_symmetric(g))
    throw DomainError("not classifiable: game is asymmetric (col payoffs are not the transpose)");
  const Matrix& a = g.row_payoffs();
  return classify({.T = a(1, 0), .R = a(0, 0), .S = a(0, 1), .P = a(1, 1)});
}

enum class NamedGame { kLeader, kBattleOfSexes, kChicken, kPrisonersDilemma, kHostage, kKamikaze };

inline constexpr std::array kAllNamedGames{NamedGame::kLeader,  NamedGame::kBattleOfSexes,
                                           NamedGame::kChicken, NamedGame::kPrisonersDilemma,
                                           NamedGame::kHostage, NamedGame::kKamikaze};

inline const char* display_name(NamedGame n) {
  switch (n) {
    case NamedGame::kLeader: return "Leader";
    case NamedGame::kBattleOfSexes: return "Battle of the Sexes";
    case NamedGame::kChicken: return "Chicken";
    case NamedGame::kPrisonersDilemma: return "Prisoner's Dilemma";
    case NamedGame::kHostage: return "Hostage Situation";
    case NamedGame::kKamikaze: return "Kamikaze";
  }
  return "?";
}

// Accepts the class names ("PrisonersDilemma") as well as short forms
// ("pd", "prisoners-dilemma", "bos"), case-insensitively.
inline std::optional<NamedGame> named_game_from_string(std::string_view name) {
  std::string key;
  for (char ch : name)
    if (std::isalnum(static_cast<unsigned char>(ch)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "leader" || key == "coordination") return NamedGame::kLeader;
  if (key == "battleofsexes" || key == "battleofthesexes" || key == "bos")
    return NamedGame::kBattleOfSexes;
  if (key == "chicken") return NamedGame::kChicken;
  if (key == "prisonersdilemma" || key == "pd") return NamedGame::kPrisonersDilemma;
  if (key == "hostage" || key == "hostagesituation") return NamedGame::kHostage;
  if (key == "kamikaze") return NamedGame::kKamikaze;
  return std::nullopt;
}

// Preference-rank payoffs (1 = worst, 4 = best) of the named games.
inline BimatrixGame canonical(NamedGame n) {
  auto make = [](Matrix a, Matrix b) {
    return BimatrixGame(std::move(a), std::move(b), {"C", "D"}, {"C", "D"});
  };
  switch (n) {
    case NamedGame::kLeader: return make({{2, 3}, {4, 1}}, {{2, 4}, {3, 1}});
    case NamedGame::kBattleOfSexes: return make({{1, 3}, {4, 2}}, {{1, 4}, {3, 2}});
    case NamedGame::kChicken: return make({{3, 2}, {4, 1}}, {{3, 4}, {2, 1}});
    case NamedGame::kPrisonersDilemma: return make({{3, 1}, {4, 2}}, {{3, 4}, {1, 2}});
    // Player 1 is the assaulter, player 2 the rescuer.
    case NamedGame::kHostage: return make({{2, 1}, {4, 3}}, {{3, 4}, {2, 1}});
    // Hostage with the rescuer's payoffs 1 and 2 exchanged.
    case NamedGame::kKamikaze: return make({{2, 1}, {4, 3}}, {{3, 4}, {1, 2}});
  }
  throw DomainError("unknown named game");
}

}  // namespace gamekit

#endif  // GAMEKIT_TAXONOMY_HPP_
