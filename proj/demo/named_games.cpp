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

// Prints the equilibrium structure of every named 2x2 game.

#include <iostream>

#include "gamekit/gamekit.hpp"

int main() {
  using namespace gamekit;
  for (NamedGame n : kAllNamedGames) {
    const BimatrixGame g = canonical(n);
    std::cout << display_name(n) << '\n';
    for (Cell c : pure_nash(g))
      std::cout << "  equilibrium (" << g.label(Player::kRow, c.row) << ","
                << g.label(Player::kCol, c.col) << ") pays (" << g.row_payoffs()(c.row, c.col)
                << "," << g.col_payoffs()(c.row, c.col) << ")\n";
    const MaximinOutcome m = maximin_outcome(g);
    std::cout << "  maximin play pays (" << m.row_payoff << "," << m.col_payoff << ")"
              << (m.consistent ? ", matching both security levels" : "") << '\n';
    if (is_symmetric(g)) std::cout << "  class " << to_string(classify_game(g).kind) << '\n';
  }
}
