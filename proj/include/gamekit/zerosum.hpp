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

#ifndef GAMEKIT_ZEROSUM_HPP_
#define GAMEKIT_ZEROSUM_HPP_

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "gamekit/bimatrix.hpp"
#include "gamekit/text.hpp"

namespace gamekit {

// Cells that are a minimum of their row and a maximum of their column in the
// row player's payoffs, in (row, col) lexicographic order.
inline std::vector<Cell> saddle_points(const BimatrixGame& g) {
  if (!is_zero_sum(g)) throw DomainError("saddle_points requires a zero-sum game");
  const Matrix& a = g.row_payoffs();
  std::vector<double> row_min(g.rows(), std::numeric_limits<double>::infinity());
  std::vector<double> col_max(g.cols(), -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      row_min[r] = std::min(row_min[r], a(r, c));
      col_max[c] = std::max(col_max[c], a(r, c));
    }
  std::vector<Cell> out;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (less_or_equal(a(r, c), row_min[r]) && less_or_equal(col_max[c], a(r, c)))
        out.push_back({r, c});
  return out;
}

struct Security {
  std::size_t strategy = 0;
  double value = 0;  // worst-case payoff of `strategy` to its own player
};

// Pure maximin strategy of `player` on its own payoffs; lowest index on ties.
inline Security maximin_security(const BimatrixGame& g, Player player) {
  const Matrix& m = g.payoffs(player);
  const std::size_t own = g.strategy_count(player);
  const std::size_t opp = player == Player::kRow ? g.cols() : g.rows();
  Security best{0, -std::numeric_limits<double>::infinity()};
  for (std::size_t s = 0; s < own; ++s) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t o = 0; o < opp; ++o)
      worst = std::min(worst, player == Player::kRow ? m(s, o) : m(o, s));
    if (definitely_less(best.value, worst)) best = {s, worst};
  }
  return best;
}

// The outcome reached when both players independently play their maximin
// strategies. `consistent` holds when the cell pays each player exactly its
// security value, i.e. the securities describe one stable pure outcome.
struct MaximinOutcome {
  Cell cell;
  Security row;
  Security col;
  double row_payoff = 0;
  double col_payoff = 0;
  bool consistent = false;
};

inline MaximinOutcome maximin_outcome(const BimatrixGame& g) {
  MaximinOutcome m;
  m.row = maximin_security(g, Player::kRow);
  m.col = maximin_security(g, Player::kCol);
  m.cell = {m.row.strategy, m.col.strategy};
  m.row_payoff = g.row_payoffs()(m.cell.row, m.cell.col);
  m.col_payoff = g.col_payoffs()(m.cell.row, m.cell.col);
  m.consistent = approx_equal(m.row_payoff, m.row.value) && approx_equal(m.col_payoff, m.col.value);
  return m;
}

// Closed-form minimax solution of a 2x2 zero-sum game without a pure saddle:
//   x = (d-c)/D, y = (d-b)/D, u = (ad-bc)/D with D = a-b-c+d.
inline Solution solve_2x2_mixed(const ZeroSum2x2& z) {
  const BimatrixGame g = z.to_game();
  auto saddles = saddle_points(g);
  if (!saddles.empty()) {
    const Cell s = saddles.front();
    throw DomainError("game has a pure saddle point at (" + std::to_string(s.row) + "," +
                      std::to_string(s.col) + ") with value " +
                      text::sig6(g.row_payoffs()(s.row, s.col)) + "; use saddle_points");
  }
  const double denom = z.a - z.b - z.c + z.d;
  if (approx_equal(denom, 0.0))
    throw DomainError("degenerate 2x2 game: a-b-c+d is zero; eliminate dominated strategies first");
  const double x = (z.d - z.c) / denom;
  const double y = (z.d - z.b) / denom;
  const double u = (z.a * z.d - z.b * z.c) / denom;
  Solution s;
  s.kind = SolutionKind::kMixed;
  s.row_mix = {x, 1.0 - x};
  s.col_mix = {y, 1.0 - y};
  s.row_value = u;
  s.col_value = -u;
  return s;
}

// Pure saddle when one exists (first in lexicographic order), otherwise the
// 2x2 mixed solution. Larger games without a saddle are unsupported.
inline Solution solve_zero_sum(const BimatrixGame& g) {
  auto saddles = saddle_points(g);
  if (!saddles.empty()) {
    Solution s = Solution::pure(g, saddles.front());
    s.col_value = -s.row_value;
    return s;
  }
  if (g.rows() != 2 || g.cols() != 2)
    throw UnsupportedError("no pure saddle point and the game is " + std::to_string(g.rows()) +
                           "x" + std::to_string(g.cols()) +
                           "; mixed solutions are only computed for 2x2 games");
  const Matrix& a = g.row_payoffs();
  return solve_2x2_mixed({a(0, 0), a(0, 1), a(1, 0), a(1, 1)});
}

}  // namespace gamekit

#endif  // GAMEKIT_ZEROSUM_HPP_
