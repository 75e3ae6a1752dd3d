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

#ifndef GAMEKIT_NASH_HPP_
#define GAMEKIT_NASH_HPP_

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "gamekit/bimatrix.hpp"

namespace gamekit {

// Best-response marking: a cell is an equilibrium when the row payoff is a
// maximum of its column and the column payoff is a maximum of its row.
// Ties within tolerance count as maxima.
inline std::vector<Cell> pure_nash(const BimatrixGame& g) {
  const Matrix& a = g.row_payoffs();
  const Matrix& b = g.col_payoffs();
  std::vector<double> col_best(g.cols(), -std::numeric_limits<double>::infinity());
  std::vector<double> row_best(g.rows(), -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      col_best[c] = std::max(col_best[c], a(r, c));
      row_best[r] = std::max(row_best[r], b(r, c));
    }
  std::vector<Cell> out;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (less_or_equal(col_best[c], a(r, c)) && less_or_equal(row_best[r], b(r, c)))
        out.push_back({r, c});
  return out;
}

struct MixedNashResult {
  std::optional<Solution> solution;
  // The indifference system had a zero denominator for at least one player.
  bool degenerate = false;
};

// Interior mixed equilibrium of a 2x2 game by the indifference principle.
// x (row player's weight on its first strategy) equalizes the column
// player's two pure payoffs; y equalizes the row player's.
inline MixedNashResult mixed_nash_2x2(const BimatrixGame& g) {
  if (g.rows() != 2 || g.cols() != 2) throw DomainError("mixed_nash_2x2 requires a 2x2 game");
  const Matrix& a = g.row_payoffs();
  const Matrix& b = g.col_payoffs();
  const double dx = b(0, 0) - b(0, 1) - b(1, 0) + b(1, 1);
  const double dy = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  MixedNashResult res;
  if (approx_equal(dx, 0.0) || approx_equal(dy, 0.0)) {
    res.degenerate = true;
    return res;
  }
  const double x = (b(1, 1) - b(1, 0)) / dx;
  const double y = (a(1, 1) - a(0, 1)) / dy;
  auto interior = [](double p) { return p > kTolerance && p < 1.0 - kTolerance; };
  if (!interior(x) || !interior(y)) return res;
  Solution s;
  s.kind = SolutionKind::kMixed;
  s.row_mix = {x, 1.0 - x};
  s.col_mix = {y, 1.0 - y};
  auto [u1, u2] = expected_payoffs(g, s.row_mix, s.col_mix);
  s.row_value = u1;
  s.col_value = u2;
  res.solution = std::move(s);
  return res;
}

struct PureEquilibrium {
  Cell cell;
  double row_payoff = 0;
  double col_payoff = 0;
};

struct EquilibriumReport {
  std::vector<PureEquilibrium> pure;
  std::optional<Solution> mixed;
  bool mixed_computed = false;    // false for shapes other than 2x2
  bool mixed_degenerate = false;  // indifference system had no unique solution
  std::size_t total_count = 0;
  // Even totals contradict the oddness theorem, which covers only
  // non-degenerate games; reported as a warning.
  bool even_count_warning = false;
};

inline EquilibriumReport equilibrium_report(const BimatrixGame& g) {
  EquilibriumReport rep;
  for (Cell c : pure_nash(g))
    rep.pure.push_back({c, g.row_payoffs()(c.row, c.col), g.col_payoffs()(c.row, c.col)});
  if (g.rows() == 2 && g.cols() == 2) {
    rep.mixed_computed = true;
    auto m = mixed_nash_2x2(g);
    rep.mixed = std::move(m.solution);
    rep.mixed_degenerate = m.degenerate;
  }
  rep.total_count = rep.pure.size() + (rep.mixed ? 1 : 0);
  rep.even_count_warning = rep.total_count % 2 == 0;
  return rep;
}

}  // namespace gamekit

#endif  // GAMEKIT_NASH_HPP_
