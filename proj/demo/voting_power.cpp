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

// Voting weight versus voting power for a small committee.

#include <iostream>

#include "gamekit/gamekit.hpp"

int main() {
  using namespace gamekit;
  const WeightedVotingGame committee({3, 2, 1}, 4);
  const PowerIndexResult bz = banzhaf(committee);
  const PowerIndexResult ss = shapley_shubik(committee);
  const double total = committee.total_weight();
  std::cout << "player  weight share  banzhaf  shapley-shubik\n";
  for (std::size_t i = 0; i < committee.size(); ++i)
    std::cout << "  " << i + 1 << "     " << text::fixed6(committee.weights()[i] / total) << "  "
              << bz.fraction(i) << "      " << ss.fraction(i) << '\n';

  const double p[] = {0.8, 0.6, 0.6};
  const CompetencyProfile prof = log_odds_weights(p);
  const double uniform[] = {1, 1, 1};
  std::cout << "majority correct, equal weights:    "
            << jury_probability_weighted<double>(uniform, p) << '\n'
            << "majority correct, log-odds weights: "
            << jury_probability_weighted<double>(prof.w, p) << '\n';
}
