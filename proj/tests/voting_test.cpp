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

#include <random>

#include "gamekit/gamekit.hpp"
#include "oracles.hpp"

namespace gamekit {
namespace {

std::vector<std::string> fractions(const PowerIndexResult& r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.raw.size(); ++i) out.push_back(r.fraction(i));
  return out;
}

using Strings = std::vector<std::string>;

TEST(PowerIndex, ThreeTwoOneQuotaFour) {
  const WeightedVotingGame v({3, 2, 1}, 4);
  EXPECT_EQ(oracle::banzhaf_swings(v.weights(), v.quota()), (std::vector<std::uint64_t>{3, 1, 1}));
  EXPECT_EQ(oracle::shapley_pivots(v.weights(), v.quota()), (std::vector<std::uint64_t>{4, 1, 1}));
  EXPECT_EQ(fractions(banzhaf(v)), (Strings{"3/5", "1/5", "1/5"}));
  EXPECT_EQ(fractions(shapley_shubik(v)), (Strings{"2/3", "1/6", "1/6"}));
}

TEST(PowerIndex, Dictator) {
  const WeightedVotingGame v({5, 1, 1}, 5);
  EXPECT_EQ(fractions(banzhaf(v)), (Strings{"1", "0", "0"}));
  EXPECT_EQ(fractions(shapley_shubik(v)), (Strings{"1", "0", "0"}));
}

TEST(PowerIndex, EqualWeightsEqualPower) {
  const WeightedVotingGame v({1, 1, 1}, 2);
  EXPECT_EQ(fractions(banzhaf(v)), (Strings{"1/3", "1/3", "1/3"}));
  EXPECT_EQ(fractions(shapley_shubik(v)), (Strings{"1/3", "1/3", "1/3"}));
}

TEST(PowerIndex, WeightIsNotPower) {
  // Weights 49/49/2 with a simple majority: every pair wins, so the small
  // player has the same power as the large ones.
  const WeightedVotingGame v({49, 49, 2}, 51);
  EXPECT_EQ(fractions(banzhaf(v)), (Strings{"1/3", "1/3", "1/3"}));
}

TEST(PowerIndex, UnwinnableQuotaGivesZeroPower) {
  const WeightedVotingGame v({1, 1}, 5);
  EXPECT_FALSE(v.winnable());
  const auto b = banzhaf(v);
  EXPECT_EQ(b.denominator, 0u);
  EXPECT_EQ(b.normalized, (std::vector<double>{0, 0}));
  EXPECT_EQ(shapley_shubik(v).normalized, (std::vector<double>{0, 0}));
}

TEST(PowerIndex, MatchesOraclesOnRandomGames) {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> size(1, 10), weight(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    std::vector<double> w(n);
    double total = 0;
    for (double& x : w) total += (x = weight(rng));
    std::uniform_int_distribution<int> q(1, std::max(1, static_cast<int>(total)));
    const WeightedVotingGame v(w, q(rng));
    EXPECT_EQ(banzhaf(v).raw, oracle::banzhaf_swings(w, v.quota()));
    if (n <= 8) {
      EXPECT_EQ(shapley_shubik(v).raw, oracle::shapley_pivots(w, v.quota()));
    }
  }
}

TEST(PowerIndex, Properties) {
  std::mt19937_64 rng(56);
  std::uniform_int_distribution<int> size(1, 12), weight(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    std::vector<double> w(n);
    double total = 0;
    for (double& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    std::uniform_int_distribution<int> q(1, static_cast<int>(total));
    const WeightedVotingGame v(w, q(rng));
    for (const auto& r : {banzhaf(v), shapley_shubik(v)}) {
      double sum = 0;
      for (double x : r.normalized) sum += x;
      EXPECT_NEAR(sum, 1.0, 1e-12);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (w[i] >= w[j]) {
            EXPECT_GE(r.raw[i], r.raw[j]);  // monotone in weight
          }
      for (std::size_t i = 0; i < n; ++i)
        if (w[i] == 0) {
          EXPECT_EQ(r.raw[i], 0u);  // null player
        }
    }
  }
}

TEST(PowerIndex, ThreadedMatchesSequential) {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> weight(1, 20);
  std::vector<double> w(16);
  double total = 0;
  for (double& x : w) total += (x = weight(rng));
  const WeightedVotingGame v(w, std::floor(total / 2) + 1);
  const auto b1 = banzhaf(v, 1), s1 = shapley_shubik(v, 1);
  for (std::size_t threads : {2u, 3u, 8u}) {
    EXPECT_EQ(banzhaf(v, threads).raw, b1.raw);
    EXPECT_EQ(shapley_shubik(v, threads).raw, s1.raw);
  }
}

TEST(PowerIndex, SizeLimits) {
  EXPECT_THROW(banzhaf(WeightedVotingGame(std::vector<double>(25, 1), 13)), UnsupportedError);
  EXPECT_THROW(shapley_shubik(WeightedVotingGame(std::vector<double>(21, 1), 11)),
               UnsupportedError);
}

TEST(WeightedVotingGame, Validation) {
  EXPECT_THROW(WeightedVotingGame({1, 2}, 0), DomainError);
  EXPECT_THROW(WeightedVotingGame({1, -2}, 1), DomainError);
  EXPECT_THROW(WeightedVotingGame({}, 1), DomainError);
  const WeightedVotingGame v({3, 2, 1}, 4);
  EXPECT_TRUE(is_winning(v, std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(is_winning(v, std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(is_winning(v, std::vector<std::size_t>{3}), DomainError);
}

TEST(LogOdds, Values) {
  const std::vector<double> p{0.5, 0.8, 0.2};
  const auto prof = log_odds_weights(p);
  EXPECT_EQ(prof.w[0], 0.0);
  EXPECT_NEAR(prof.w[1], std::log(4.0), 1e-15);
  EXPECT_NEAR(prof.w[2], -std::log(4.0), 1e-15);
  EXPECT_THROW(log_odds_weights(std::vector<double>{1.0}), DomainError);
  EXPECT_THROW(log_odds_weights(std::vector<double>{0.0}), DomainError);
}

TEST(Wmr, Decisions) {
  const std::vector<double> w{2, 1, 1};
  EXPECT_EQ(wmr_decide(w, std::vector<int>{1, -1, -1}), Decision::kTie);
  EXPECT_EQ(wmr_decide(w, std::vector<int>{-1, 1, -1}), Decision::kMinus);
  EXPECT_EQ(wmr_decide(w, std::vector<int>{1, 1, -1}), Decision::kPlus);
  EXPECT_THROW(wmr_decide(w, std::vector<int>{1, 0, 1}), DomainError);
  EXPECT_THROW(wmr_decide(w, std::vector<int>{1}), DomainError);
}

TEST(Jury, ExactValues) {
  EXPECT_EQ(jury_probability<Rational>(3, Rational(3, 5)), Rational(81, 125));
  EXPECT_EQ(jury_probability<Rational>(5, Rational(3, 5)), parse_rational("0.68256"));
  EXPECT_EQ(jury_probability<Rational>(1, Rational(3, 5)), Rational(3, 5));
  EXPECT_NEAR(jury_probability<double>(3, 0.6), 0.648, 1e-15);
  EXPECT_THROW(jury_probability<double>(4, 0.6), DomainError);
  EXPECT_THROW(jury_probability<double>(3, 1.0), DomainError);
}

TEST(Jury, MatchesPascalOracle) {
  for (std::size_t n = 1; n <= 19; n += 2)
    for (int k = 1; k < 20; ++k) {
      const Rational p(k, 20);
      EXPECT_EQ(jury_probability<Rational>(n, p), oracle::binomial_majority(n, p));
    }
}

TEST(Jury, MonotoneInGroupSize) {
  for (int k = 11; k <= 19; ++k) {
    const Rational p(k, 20);
    Rational prev = p;
    for (std::size_t n = 3; n <= 19; n += 2) {
      const Rational cur = jury_probability<Rational>(n, p);
      EXPECT_GT(cur, prev) << "p=" << k << "/20 n=" << n;
      prev = cur;
    }
  }
}

TEST(Jury, HalfCompetenceStaysAtHalf) {
  for (std::size_t n = 1; n <= 19; n += 2)
    EXPECT_EQ(jury_probability<Rational>(n, Rational(1, 2)), Rational(1, 2));
}

TEST(Jury, WeightedEqualWeightsIsMajority) {
  const std::vector<double> w(5, 1.0);
  const std::vector<Rational> p(5, Rational(3, 5));
  EXPECT_EQ(jury_probability_weighted<Rational>(w, p), jury_probability<Rational>(5, Rational(3, 5)));
}

TEST(Jury, WeightedTiesCountHalf) {
  const std::vector<double> w{1, 1};
  const std::vector<Rational> p{Rational(3, 4), Rational(3, 4)};
  // Both right 9/16, split 6/16 counted half.
  EXPECT_EQ(jury_probability_weighted<Rational>(w, p), Rational(9, 16) + Rational(3, 16));
}

TEST(Jury, LogOddsWeightsAreOptimal) {
  std::mt19937_64 rng(58);
  std::uniform_real_distribution<double> comp(0.51, 0.95), weight(0.0, 5.0);
  for (int profile = 0; profile < 20; ++profile) {
    std::vector<double> p(5);
    for (double& x : p) x = comp(rng);
    const auto prof = log_odds_weights(p);
    const double best = jury_probability_weighted<double>(prof.w, p);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> w(5);
      for (double& x : w) x = weight(rng);
      EXPECT_LE(jury_probability_weighted<double>(w, p), best + 1e-12);
    }
  }
}

TEST(VotingFile, Parse) {
  const VotingFile f = parse_voting(
      "voting:\nquota: 4\nweights: 3 2 1\ncompetencies: 0.8 0.6 0.6\n");
  EXPECT_EQ(f.game.weights(), (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(f.game.quota(), 4);
  ASSERT_TRUE(f.competencies);
  EXPECT_EQ(f.competencies->size(), 3u);
  EXPECT_THROW(parse_voting("voting:\nquota: 4\n"), ParseError);
  EXPECT_THROW(parse_voting("voting:\nquota: 4\nweights: 1 x\n"), ParseError);
  EXPECT_THROW(parse_voting("voting:\nquota: 4\nweights: 1 1\ncompetencies: 0.5\n"),
               ParseError);
}

}  // namespace
}  // namespace gamekit
