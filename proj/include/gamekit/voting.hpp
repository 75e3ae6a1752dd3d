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

#ifndef GAMEKIT_VOTING_HPP_
#define GAMEKIT_VOTING_HPP_

// Weighted majority games, power indices, weighted majority rules and
// jury-theorem probabilities.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "gamekit/common.hpp"
#include "gamekit/rational.hpp"

namespace gamekit {

inline constexpr std::size_t kMaxBanzhafPlayers = 24;
inline constexpr std::size_t kMaxShapleyPlayers = 20;
inline constexpr std::size_t kMaxJuryVoters = 20;

// A coalition wins when the sum of its members' weights reaches the quota.
class WeightedVotingGame {
 public:
  WeightedVotingGame(std::vector<double> weights, double quota)
      : weights_(std::move(weights)), quota_(quota) {
    if (weights_.empty()) throw DomainError("voting game needs at least one player");
    if (!std::isfinite(quota_) || quota_ <= 0) throw DomainError("quota must be a positive number");
    for (double w : weights_)
      if (!std::isfinite(w) || w < 0) throw DomainError("weights must be finite and >= 0");
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double quota() const { return quota_; }
  double total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

  // False when even the grand coalition falls short of the quota.
  bool winnable() const { return less_or_equal(quota_, total_weight()); }

  bool winning_weight(double w) const { return less_or_equal(quota_, w); }

 private:
  std::vector<double> weights_;
  double quota_;
};

inline bool is_winning(const WeightedVotingGame& v, std::span<const std::size_t> coalition) {
  std::vector<bool> member(v.size(), false);
  for (std::size_t i : coalition) {
    if (i >= v.size())
      throw DomainError("player index " + std::to_string(i) + " out of range (n = " +
                        std::to_string(v.size()) + ")");
    member[i] = true;
  }
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (member[i]) sum += v.weights()[i];
  return v.winning_weight(sum);
}

enum class PowerIndex { kBanzhaf, kShapleyShubik };

struct PowerIndexResult {
  PowerIndex method = PowerIndex::kBanzhaf;
  std::vector<std::uint64_t> raw;   // swing counts or pivot counts
  std::uint64_t denominator = 0;    // total swings (Banzhaf) or n! (Shapley-Shubik)
  std::vector<double> normalized;
  bool exact = true;

  std::string fraction(std::size_t i) const { return to_fraction_string(raw[i], denominator); }
};

namespace detail {

// Weight sums of all 2^n coalitions via two half-width lookup tables, so every
// sum is computed the same way regardless of enumeration order.
class CoalitionSums {
 public:
  explicit CoalitionSums(std::span<const double> w) : low_bits_(w.size() / 2) {
    auto table = [&](std::size_t offset, std::size_t count) {
      std::vector<double> t(std::size_t{1} << count, 0.0);
      for (std::size_t m = 1; m < t.size(); ++m) {
        double s = 0;
        for (std::size_t b = 0; b < count; ++b)
          if (m >> b & 1) s += w[offset + b];
        t[m] = s;
      }
      return t;
    };
    low_ = table(0, low_bits_);
    high_ = table(low_bits_, w.size() - low_bits_);
  }
  double operator()(std::uint32_t mask) const {
    return low_[mask & ((std::uint32_t{1} << low_bits_) - 1)] + high_[mask >> low_bits_];
  }

 private:
  std::size_t low_bits_;
  std::vector<double> low_, high_;
};

// Runs body(begin, end, counts) over [0, total) split into `threads` contiguous
// chunks, each with its own zeroed counter vector, then sums the counters.
// Integer accumulation makes the result independent of the split.
template <class Body>
std::vector<std::uint64_t> parallel_count(std::uint64_t total, std::size_t width,
                                          std::size_t threads, Body body) {
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(width, 0));
  const std::uint64_t chunk = (total + threads - 1) / threads;
  if (threads == 1) {
    body(std::uint64_t{0}, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      std::uint64_t b = std::min(total, t * chunk), e = std::min(total, b + chunk);
      pool.emplace_back([&, t, b, e] { body(b, e, partial[t]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> out(width, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < width; ++i) out[i] += p[i];
  return out;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

// raw[i] counts coalitions S not containing i that lose on their own but win
// once i joins; each is a swing of i in S + {i}.
inline PowerIndexResult banzhaf(const WeightedVotingGame& v, std::size_t threads = 1) {
  const std::size_t n = v.size();
  if (n > kMaxBanzhafPlayers)
    throw UnsupportedError("exact Banzhaf index supports at most " +
                           std::to_string(kMaxBanzhafPlayers) + " players, got " +
                           std::to_string(n));
  detail::CoalitionSums sums(v.weights());
  auto raw = detail::parallel_count(
      std::uint64_t{1} << n, n, threads,
      [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
        for (std::uint64_t m = begin; m < end; ++m) {
          const auto mask = static_cast<std::uint32_t>(m);
          if (v.winning_weight(sums(mask))) continue;
          for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (!(mask & bit) && v.winning_weight(sums(mask | bit))) ++counts[i];
          }
        }
      });
  PowerIndexResult res;
  res.method = PowerIndex::kBanzhaf;
  res.denominator = std::accumulate(raw.begin(), raw.end(), std::uint64_t{0});
  res.normalized.assign(n, 0.0);
  if (res.denominator > 0)
    for (std::size_t i = 0; i < n; ++i)
      res.normalized[i] = static_cast<double>(raw[i]) / static_cast<double>(res.denominator);
  res.raw = std::move(raw);
  return res;
}

// raw[i] is the number of the n! arrival orders in which i is pivotal:
// sum over losing S not containing i with S + {i} winning of |S|! (n-|S|-1)!.
inline PowerIndexResult shapley_shubik(const WeightedVotingGame& v, std::size_t threads = 1) {
  const std::size_t n = v.size();
  if (n > kMaxShapleyPlayers)
    throw UnsupportedError("exact Shapley-Shubik index supports at most " +
                           std::to_string(kMaxShapleyPlayers) + " players, got " +
                           std::to_string(n));
  std::vector<std::uint64_t> fact(n + 1);
  for (std::size_t k = 0; k <= n; ++k) fact[k] = detail::factorial(k);
  detail::CoalitionSums sums(v.weights());
  auto raw = detail::parallel_count(
      std::uint64_t{1} << n, n, threads,
      [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
        for (std::uint64_t m = begin; m < end; ++m) {
          const auto mask = static_cast<std::uint32_t>(m);
          if (v.winning_weight(sums(mask))) continue;
          const auto size = static_cast<std::size_t>(std::popcount(mask));
          if (size == n) continue;
          const std::uint64_t orders = fact[size] * fact[n - size - 1];
          for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (!(mask & bit) && v.winning_weight(sums(mask | bit))) counts[i] += orders;
          }
        }
      });
  PowerIndexResult res;
  res.method = PowerIndex::kShapleyShubik;
  res.denominator = fact[n];
  res.normalized.assign(n, 0.0);
  const std::uint64_t pivots = std::accumulate(raw.begin(), raw.end(), std::uint64_t{0});
  if (pivots > 0)
    for (std::size_t i = 0; i < n; ++i)
      res.normalized[i] = static_cast<double>(raw[i]) / static_cast<double>(res.denominator);
  res.raw = std::move(raw);
  return res;
}

// ---------------------------------------------------------------------------
// Competence-weighted decision rules.

struct CompetencyProfile {
  std::vector<double> p;  // probability each voter is correct
  std::vector<double> w;  // ln(p / (1 - p))
};

inline CompetencyProfile log_odds_weights(std::span<const double> p) {
  CompetencyProfile prof;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k] > 0.0 && p[k] < 1.0))
      throw DomainError("competency of voter " + std::to_string(k + 1) +
                        " must lie strictly between 0 and 1");
    prof.p.push_back(p[k]);
    prof.w.push_back(std::log(p[k] / (1.0 - p[k])));
  }
  return prof;
}

enum class Decision { kMinus = -1, kTie = 0, kPlus = 1 };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::kMinus: return "-1";
    case Decision::kTie: return "tie";
    case Decision::kPlus: return "+1";
  }
  return "?";
}

// Sign of the weighted vote; votes are +1 or -1.
inline Decision wmr_decide(std::span<const double> weights, std::span<const int> votes) {
  if (weights.size() != votes.size())
    throw DomainError("weights and votes differ in length (" + std::to_string(weights.size()) +
                      " vs " + std::to_string(votes.size()) + ")");
  double sum = 0;
  for (std::size_t k = 0; k < votes.size(); ++k) {
    if (votes[k] != 1 && votes[k] != -1) throw DomainError("votes must be +1 or -1");
    sum += weights[k] * votes[k];
  }
  if (std::fabs(sum) < kTolerance) return Decision::kTie;
  return sum > 0 ? Decision::kPlus : Decision::kMinus;
}

namespace detail {

template <class T>
bool in_open_unit(const T& p) {
  return p > T(0) && p < T(1);
}

}  // namespace detail

// Probability that a majority of n independent voters, each correct with
// probability p, is correct. T is double or Rational.
template <class T>
T jury_probability(std::size_t n, const T& p) {
  if (n == 0 || n % 2 == 0)
    throw DomainError("jury size must be odd and >= 1, got " + std::to_string(n));
  if (!detail::in_open_unit(p)) throw DomainError("competency must lie strictly between 0 and 1");
  const T q = T(1) - p;
  T total = 0;
  T binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * T(n - k + 1) / T(k);
    if (2 * k > n) {
      T term = binom;
      for (std::size_t i = 0; i < k; ++i) term *= p;
      for (std::size_t i = k; i < n; ++i) term *= q;
      total += term;
    }
  }
  return total;
}

// Probability that the weighted majority rule with `weights` picks the
// correct alternative when voter k is independently correct with
// probability p[k]. Ties count as half correct. Enumerates all 2^n
// correctness patterns.
template <class T>
T jury_probability_weighted(std::span<const double> weights, std::span<const T> p) {
  const std::size_t n = p.size();
  if (weights.size() != n)
    throw DomainError("weights and competencies differ in length (" +
                      std::to_string(weights.size()) + " vs " + std::to_string(n) + ")");
  if (n == 0) throw DomainError("jury needs at least one voter");
  if (n > kMaxJuryVoters)
    throw UnsupportedError("exact weighted jury probability supports at most " +
                           std::to_string(kMaxJuryVoters) + " voters, got " + std::to_string(n));
  for (std::size_t k = 0; k < n; ++k)
    if (!detail::in_open_unit(p[k]))
      throw DomainError("competency of voter " + std::to_string(k + 1) +
                        " must lie strictly between 0 and 1");
  T total = 0;
  const T half = T(1) / T(2);
  std::vector<int> votes(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    T prob = 1;
    for (std::size_t k = 0; k < n; ++k) {
      const bool correct = mask >> k & 1;
      votes[k] = correct ? 1 : -1;
      prob *= correct ? p[k] : T(1) - p[k];
    }
    switch (wmr_decide(weights, votes)) {
      case Decision::kPlus: total += prob; break;
      case Decision::kTie: total += prob * half; break;
      case Decision::kMinus: break;
    }
  }
  return total;
}

}  // namespace gamekit

#endif  // GAMEKIT_VOTING_HPP_
