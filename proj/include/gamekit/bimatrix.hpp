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

#ifndef GAMEKIT_BIMATRIX_HPP_
#define GAMEKIT_BIMATRIX_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamekit/common.hpp"
#include "gamekit/matrix.hpp"

namespace gamekit {

// Two-player normal-form game. Row player receives row_payoffs(r, c), column
// player receives col_payoffs(r, c). Labels are optional; when absent the
// strategy index is used as its name.
class BimatrixGame {
 public:
  BimatrixGame(Matrix row_payoffs, Matrix col_payoffs,
               std::vector<std::string> row_labels = {},
               std::vector<std::string> col_labels = {})
      : row_payoffs_(std::move(row_payoffs)),
        col_payoffs_(std::move(col_payoffs)),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {
    if (row_payoffs_.rows() == 0 || row_payoffs_.cols() == 0)
      throw DomainError("game needs at least one strategy per player");
    if (!row_payoffs_.same_shape(col_payoffs_))
      throw DomainError("row and column payoff matrices differ in shape");
    for (const Matrix* m : {&row_payoffs_, &col_payoffs_})
      for (double v : m->values())
        if (!std::isfinite(v)) throw DomainError("payoffs must be finite");
    if (!row_labels_.empty() && row_labels_.size() != rows())
      throw DomainError("row label count does not match row count");
    if (!col_labels_.empty() && col_labels_.size() != cols())
      throw DomainError("column label count does not match column count");
  }

  // Zero-sum game: the column player receives the negated row payoffs.
  static BimatrixGame zero_sum(Matrix row_payoffs, std::vector<std::string> row_labels = {},
                               std::vector<std::string> col_labels = {}) {
    Matrix col = row_payoffs.negated();
    return BimatrixGame(std::move(row_payoffs), std::move(col), std::move(row_labels),
                        std::move(col_labels));
  }

  std::size_t rows() const { return row_payoffs_.rows(); }
  std::size_t cols() const { return row_payoffs_.cols(); }
  const Matrix& row_payoffs() const { return row_payoffs_; }
  const Matrix& col_payoffs() const { return col_payoffs_; }
  const Matrix& payoffs(Player p) const {
    return p == Player::kRow ? row_payoffs_ : col_payoffs_;
  }
  std::size_t strategy_count(Player p) const { return p == Player::kRow ? rows() : cols(); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  bool has_labels(Player p) const {
    return p == Player::kRow ? !row_labels_.empty() : !col_labels_.empty();
  }

  std::string label(Player p, std::size_t index) const {
    const auto& labels = p == Player::kRow ? row_labels_ : col_labels_;
    return labels.empty() ? std::to_string(index) : labels[index];
  }

  // Restriction to the listed strategies (original order preserved by caller).
  BimatrixGame subgame(const std::vector<std::size_t>& keep_rows,
                       const std::vector<std::size_t>& keep_cols) const {
    auto pick = [](const std::vector<std::string>& labels,
                   const std::vector<std::size_t>& keep) {
      std::vector<std::string> out;
      if (labels.empty()) return out;
      for (std::size_t i : keep) out.push_back(labels[i]);
      return out;
    };
    return BimatrixGame(row_payoffs_.select(keep_rows, keep_cols),
                        col_payoffs_.select(keep_rows, keep_cols), pick(row_labels_, keep_rows),
                        pick(col_labels_, keep_cols));
  }

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  Matrix row_payoffs_;
  Matrix col_payoffs_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Generic 2x2 zero-sum game, payoffs to the maximizing row player:
//        y   1-y
//   x  [ a    b ]
// 1-x  [ c    d ]
struct ZeroSum2x2 {
  double a = 0, b = 0, c = 0, d = 0;

  BimatrixGame to_game() const { return BimatrixGame::zero_sum(Matrix{{a, b}, {c, d}}); }
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class SolutionKind { kPure, kMixed };

// A solved two-player game. Pure solutions carry indicator vectors in
// row_mix / col_mix so callers can treat both kinds uniformly.
struct Solution {
  SolutionKind kind = SolutionKind::kPure;
  Cell cell;  // meaningful for pure solutions
  std::vector<double> row_mix;
  std::vector<double> col_mix;
  double row_value = 0;
  double col_value = 0;

  // Probability of each player's first strategy.
  double x() const { return row_mix.empty() ? 0.0 : row_mix.front(); }
  double y() const { return col_mix.empty() ? 0.0 : col_mix.front(); }

  static Solution pure(const BimatrixGame& g, Cell cell) {
    Solution s;
    s.kind = SolutionKind::kPure;
    s.cell = cell;
    s.row_mix.assign(g.rows(), 0.0);
    s.col_mix.assign(g.cols(), 0.0);
    s.row_mix[cell.row] = 1.0;
    s.col_mix[cell.col] = 1.0;
    s.row_value = g.row_payoffs()(cell.row, cell.col);
    s.col_value = g.col_payoffs()(cell.row, cell.col);
    return s;
  }
};

// Expected payoffs of the two players under independent mixed strategies.
inline std::pair<double, double> expected_payoffs(const BimatrixGame& g,
                                                  std::span<const double> row_mix,
                                                  std::span<const double> col_mix) {
  double u1 = 0, u2 = 0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      double w = row_mix[r] * col_mix[c];
      u1 += w * g.row_payoffs()(r, c);
      u2 += w * g.col_payoffs()(r, c);
    }
  return {u1, u2};
}

inline bool is_zero_sum(const BimatrixGame& g) {
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (!approx_equal(g.row_payoffs()(r, c) + g.col_payoffs()(r, c), 0.0)) return false;
  return true;
}

// Players can exchange roles: col_payoffs is the transpose of row_payoffs.
inline bool is_symmetric(const BimatrixGame& g) {
  if (g.rows() != g.cols()) return false;
  return approx_equal(g.col_payoffs(), g.row_payoffs().transposed());
}

inline BimatrixGame swap_players(const BimatrixGame& g) {
  return BimatrixGame(g.col_payoffs().transposed(), g.row_payoffs().transposed(),
                      g.col_labels(), g.row_labels());
}

// ---------------------------------------------------------------------------
// Dominance. Only pure strategies are considered as dominators.

enum class Dominance { kStrict, kWeak };

namespace detail {

// Payoff vector of strategy `s` for player `p`, restricted to the opponent's
// surviving strategies.
inline double own_payoff(const BimatrixGame& g, Player p, std::size_t s, std::size_t opp) {
  return p == Player::kRow ? g.row_payoffs()(s, opp) : g.col_payoffs()(opp, s);
}

inline bool dominates(const BimatrixGame& g, Player p, std::size_t better, std::size_t worse,
                      const std::vector<std::size_t>& opponents, Dominance mode) {
  bool some_strict = false;
  for (std::size_t o : opponents) {
    double hi = own_payoff(g, p, better, o);
    double lo = own_payoff(g, p, worse, o);
    if (definitely_less(lo, hi)) {
      some_strict = true;
    } else if (mode == Dominance::kStrict || definitely_less(hi, lo)) {
      return false;
    }
  }
  return some_strict;
}

inline std::vector<std::size_t> dominated_among(const BimatrixGame& g, Player p,
                                                const std::vector<std::size_t>& own,
                                                const std::vector<std::size_t>& opponents,
                                                Dominance mode) {
  std::vector<std::size_t> out;
  for (std::size_t s : own)
    for (std::size_t t : own)
      if (t != s && dominates(g, p, t, s, opponents, mode)) {
        out.push_back(s);
        break;
      }
  return out;
}

inline std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace detail

// Strategies of `player` dominated by another of its pure strategies, judged on
// the player's own payoffs. Ascending order.
inline std::vector<std::size_t> dominated_strategies(const BimatrixGame& g, Player player,
                                                     Dominance mode) {
  Player opp = player == Player::kRow ? Player::kCol : Player::kRow;
  return detail::dominated_among(g, player, detail::iota_vec(g.strategy_count(player)),
                                 detail::iota_vec(g.strategy_count(opp)), mode);
}

struct Removal {
  Player player;
  std::size_t index;  // index in the original game
  std::size_t round;  // 1-based
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct EliminationResult {
  BimatrixGame reduced;
  std::vector<std::size_t> kept_rows;  // original indices, ascending
  std::vector<std::size_t> kept_cols;
  std::vector<Removal> trace;
};

// Iterated elimination of dominated strategies. Each round first treats the
// row player, then the column player on the already-reduced game.
//  - strict: every strictly dominated strategy of the player is removed at once;
//  - weak: only the lowest-index weakly dominated strategy is removed.
// Stops at the first round that removes nothing.
inline EliminationResult eliminate_dominated(const BimatrixGame& g, Dominance mode) {
  std::vector<std::size_t> rows = detail::iota_vec(g.rows());
  std::vector<std::size_t> cols = detail::iota_vec(g.cols());
  std::vector<Removal> trace;

  auto prune = [&](Player p, std::vector<std::size_t>& own,
                   const std::vector<std::size_t>& opp, std::size_t round) {
    if (own.size() <= 1) return false;
    auto victims = detail::dominated_among(g, p, own, opp, mode);
    if (victims.empty()) return false;
    if (mode == Dominance::kWeak) victims.resize(1);
    for (std::size_t v : victims) {
      trace.push_back({p, v, round});
      own.erase(std::find(own.begin(), own.end(), v));
    }
    return true;
  };

  for (std::size_t round = 1;; ++round) {
    bool changed = prune(Player::kRow, rows, cols, round);
    changed = prune(Player::kCol, cols, rows, round) || changed;
    if (!changed) break;
  }
  BimatrixGame reduced = g.subgame(rows, cols);
  return {std::move(reduced), std::move(rows), std::move(cols), std::move(trace)};
}

}  // namespace gamekit

#endif  // GAMEKIT_BIMATRIX_HPP_
