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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "gamekit/gamekit.hpp"
#include "oracles.hpp"

namespace gamekit {
namespace {

std::vector<SymmetricOrdering> all_strict_orderings() {
  std::array<double, 4> v{1, 2, 3, 4};
  std::vector<SymmetricOrdering> out;
  do {
    out.push_back({v[0], v[1], v[2], v[3]});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

TEST(Classify, CanonicalGames) {
  EXPECT_EQ(classify_game(canonical(NamedGame::kLeader)).kind, GameKind::kLeader);
  EXPECT_EQ(classify_game(canonical(NamedGame::kBattleOfSexes)).kind, GameKind::kBattleOfSexes);
  EXPECT_EQ(classify_game(canonical(NamedGame::kChicken)).kind, GameKind::kChicken);
  EXPECT_EQ(classify_game(canonical(NamedGame::kPrisonersDilemma)).kind,
            GameKind::kPrisonersDilemma);
  EXPECT_EQ(classify_game(canonical(NamedGame::kChicken)).ordering, "T>R>S>P");
}

TEST(Classify, OrderingStrings) {
  EXPECT_EQ(classify({.T = 4, .R = 3, .S = 1, .P = 2}).kind, GameKind::kPrisonersDilemma);
  EXPECT_EQ(classify({.T = 4, .R = 3, .S = 2, .P = 1}).kind, GameKind::kChicken);
  EXPECT_EQ(classify({.T = 4, .R = 2, .S = 3, .P = 1}).kind, GameKind::kLeader);
  EXPECT_EQ(classify({.T = 3, .R = 2, .S = 4, .P = 1}).kind, GameKind::kBattleOfSexes);
  const GameClass tied = classify({.T = 4, .R = 3, .S = 3, .P = 1});
  EXPECT_EQ(tied.kind, GameKind::kDegenerate);
  EXPECT_EQ(tied.ordering, "T>R=S>P");
}

TEST(Classify, AllStrictOrderings) {
  std::map<GameKind, int> counts;
  for (const SymmetricOrdering& o : all_strict_orderings()) {
    const GameClass c = classify(o);
    ++counts[c.kind];
    EXPECT_NE(c.kind, GameKind::kDegenerate);
    EXPECT_FALSE(oracle::nash_by_deviation(o.to_game()).empty()) << c.ordering;
  }
  int named = 0;
  for (auto [kind, n] : counts)
    if (kind != GameKind::kTrivialPure) ++named;
  EXPECT_EQ(named, 4);
  EXPECT_EQ(counts[GameKind::kLeader], 1);
  EXPECT_EQ(counts[GameKind::kBattleOfSexes], 2);
  EXPECT_EQ(counts[GameKind::kChicken], 1);
  EXPECT_EQ(counts[GameKind::kPrisonersDilemma], 1);
  EXPECT_EQ(counts[GameKind::kTrivialPure], 19);
}

TEST(Classify, InvariantUnderMonotoneTransforms) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(0.1, 3.0);
  for (const SymmetricOrdering& o : all_strict_orderings()) {
    const GameKind base = classify(o).kind;
    for (int k = 0; k < 20; ++k) {
      // A random strictly increasing map on {1,2,3,4}.
      std::array<double, 5> f{};
      f[1] = d(rng) - 5;
      for (int i = 2; i <= 4; ++i) f[i] = f[i - 1] + d(rng);
      auto m = [&](double x) { return f[static_cast<int>(x)]; };
      EXPECT_EQ(classify({m(o.T), m(o.R), m(o.S), m(o.P)}).kind, base);
    }
  }
}

TEST(Classify, RejectsAsymmetricAndNon2x2) {
  EXPECT_THROW(classify_game(canonical(NamedGame::kHostage)), DomainError);
  EXPECT_THROW(classify_game(BimatrixGame(Matrix(3, 3), Matrix(3, 3))), DomainError);
}

TEST(Canonical, NamesRoundTrip) {
  for (NamedGame n : kAllNamedGames) {
    auto back = named_game_from_string(display_name(n));
    ASSERT_TRUE(back) << display_name(n);
    EXPECT_EQ(*back, n);
  }
  EXPECT_EQ(named_game_from_string("pd"), NamedGame::kPrisonersDilemma);
  EXPECT_EQ(named_game_from_string("bos"), NamedGame::kBattleOfSexes);
  EXPECT_FALSE(named_game_from_string("stag-hunt"));
}

TEST(Canonical, SymmetricGamesAreSymmetric) {
  for (NamedGame n : {NamedGame::kLeader, NamedGame::kBattleOfSexes, NamedGame::kChicken,
                      NamedGame::kPrisonersDilemma})
    EXPECT_TRUE(is_symmetric(canonical(n))) << display_name(n);
}

}  // namespace
}  // namespace gamekit
