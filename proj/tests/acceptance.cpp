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

// Acceptance suite: one PASS/FAIL line per criterion, with wall time and a
// short detail string. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gamekit/gamekit.hpp"
#include "gamekit_cli.hpp"
#include "oracles.hpp"

namespace {

using namespace gamekit;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail.clear();
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 means no runtime bound
  std::function<Outcome()> check;
};

std::string data(const std::string& name) { return std::string(GAMEKIT_DATA_DIR) + "/" + name; }

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

using PayoffSet = std::set<std::pair<double, double>>;

PayoffSet nash_payoffs(const BimatrixGame& g) {
  PayoffSet s;
  for (Cell c : pure_nash(g)) s.insert({g.row_payoffs()(c.row, c.col), g.col_payoffs()(c.row, c.col)});
  return s;
}

Outcome ac1() {
  Outcome o;
  int code = 0;
  const std::string out = cli_out({"solve", "zerosum", data("saddle.game")}, &code);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out == "pure saddle: (D,D) value 1\n", "output '" + out + "'");
  const Solution s = solve_zero_sum(parse_game(cli::read_file(data("saddle.game"))));
  o.require(s.kind == SolutionKind::kPure && s.cell == Cell{1, 1} && s.row_value == 1.0,
            "library solution differs");
  o.detail = o.ok ? "(D,D) value 1" : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ZeroSum2x2 z = oracle::random_saddle_free_2x2(rng);
    const Solution s = solve_zero_sum(z.to_game());
    const Matrix a{{z.a, z.b}, {z.c, z.d}};
    for (double v : oracle::row_mix_against_columns(a, s.row_mix)) worst = std::max(worst, std::fabs(v - s.row_value));
    for (double v : oracle::col_mix_against_rows(a, s.col_mix)) worst = std::max(worst, std::fabs(v - s.row_value));
    o.require(s.kind == SolutionKind::kMixed, "pure solution for saddle-free game");
  }
  o.require(worst <= 1e-9, "max indifference error " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "1000 games, max error %.2e", worst);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome ac3() {
  Outcome o;
  const BimatrixGame g = parse_game(cli::read_file(data("single_equilibrium.game")));
  const auto cells = pure_nash(g);
  o.require(cells == std::vector<Cell>{Cell{0, 1}}, "equilibrium set differs");
  o.require(g.label(Player::kRow, 0) == "A" && g.label(Player::kCol, 1) == "B", "labels");
  o.require(nash_payoffs(g) == PayoffSet{{2, 4}}, "payoffs differ");
  o.require(oracle::nash_by_deviation(g) == cells, "deviation oracle disagrees");
  if (o.ok) o.detail = "{(A,B)} payoffs (2,4)";
  return o;
}

Outcome ac4() {
  Outcome o;
  struct Expect {
    NamedGame game;
    PayoffSet equilibria;
    std::pair<double, double> maximin;
  };
  const std::vector<Expect> cases{
      {NamedGame::kLeader, {{3, 4}, {4, 3}}, {2, 2}},
      {NamedGame::kBattleOfSexes, {{3, 4}, {4, 3}}, {2, 2}},
      {NamedGame::kChicken, {{2, 4}, {4, 2}}, {3, 3}},
      {NamedGame::kPrisonersDilemma, {{2, 2}}, {2, 2}},
  };
  for (const auto& c : cases) {
    const BimatrixGame g = canonical(c.game);
    const std::string name = display_name(c.game);
    o.require(nash_payoffs(g) == c.equilibria, name + ": equilibria differ");
    o.require(pure_nash(g) == oracle::nash_by_deviation(g), name + ": oracle disagrees");
    const MaximinOutcome m = maximin_outcome(g);
    o.require(std::pair{m.row_payoff, m.col_payoff} == c.maximin, name + ": maximin pair differs");
  }
  const BimatrixGame pd = canonical(NamedGame::kPrisonersDilemma);
  const MaximinOutcome m = maximin_outcome(pd);
  o.require(pure_nash(pd) == std::vector<Cell>{m.cell}, "PD equilibrium is not the maximin cell");
  if (o.ok) o.detail = "mirrored pairs and maximin (2,2)/(2,2)/(3,3); PD (2,2)";
  return o;
}

Outcome ac5() {
  Outcome o;
  const BimatrixGame h = canonical(NamedGame::kHostage);
  o.require(nash_payoffs(h) == PayoffSet{{4, 2}}, "Hostage equilibria differ");
  o.require(pure_nash(h).size() == 1, "Hostage equilibrium count");
  o.require(!maximin_outcome(h).consistent, "Hostage has a consistent saddle");
  const BimatrixGame k = canonical(NamedGame::kKamikaze);
  o.require(nash_payoffs(k) == PayoffSet{{3, 2}} && pure_nash(k).size() == 1,
            "Kamikaze equilibria differ");
  const MaximinOutcome mk = maximin_outcome(k);
  o.require(mk.consistent && mk.row_payoff == 3 && mk.col_payoff == 2,
            "Kamikaze security outcome is not (3,2)");
  o.require(pure_nash(k).front() == mk.cell, "Kamikaze equilibrium cell differs from security cell");
  if (o.ok) o.detail = "Hostage (4,2) no saddle; Kamikaze (3,2) consistent";
  return o;
}

Outcome ac6() {
  Outcome o;
  o.require(classify_game(canonical(NamedGame::kLeader)).kind == GameKind::kLeader, "Leader");
  o.require(classify_game(canonical(NamedGame::kBattleOfSexes)).kind == GameKind::kBattleOfSexes,
            "BattleOfSexes");
  o.require(classify_game(canonical(NamedGame::kChicken)).kind == GameKind::kChicken, "Chicken");
  o.require(classify_game(canonical(NamedGame::kPrisonersDilemma)).kind ==
                GameKind::kPrisonersDilemma,
            "PrisonersDilemma");
  std::array<double, 4> v{1, 2, 3, 4};
  std::set<GameKind> named;
  int orderings = 0, trivial = 0;
  do {
    ++orderings;
    const SymmetricOrdering ord{v[0], v[1], v[2], v[3]};
    const GameKind kind = classify(ord).kind;
    if (kind == GameKind::kTrivialPure) {
      ++trivial;
      o.require(!oracle::nash_by_deviation(ord.to_game()).empty(),
                "ordering " + classify(ord).ordering + " has no pure equilibrium");
    } else {
      named.insert(kind);
    }
  } while (std::next_permutation(v.begin(), v.end()));
  o.require(orderings == 24, "ordering count");
  o.require(named.size() == 4 && !named.count(GameKind::kDegenerate),
            std::to_string(named.size()) + " named classes");
  if (o.ok)
    o.detail = "24 orderings, " + std::to_string(named.size()) + " named classes, " +
               std::to_string(trivial) + " trivial all with pure NE";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(7);
  int odd = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto rep = equilibrium_report(oracle::random_tie_free_2x2(rng));
    if (rep.total_count % 2 == 1) ++odd;
  }
  o.require(odd == 10000, std::to_string(10000 - odd) + " games with an even count");
  if (o.ok) o.detail = "10000/10000 odd";
  return o;
}

Outcome ac8() {
  Outcome o;
  const WeightedVotingGame v({3, 2, 1}, 4);
  o.require(oracle::banzhaf_swings(v.weights(), v.quota()) == std::vector<std::uint64_t>{3, 1, 1},
            "Banzhaf oracle");
  o.require(oracle::shapley_pivots(v.weights(), v.quota()) == std::vector<std::uint64_t>{4, 1, 1},
            "Shapley oracle");
  const auto b = banzhaf(v);
  const auto s = shapley_shubik(v);
  o.require(b.fraction(0) == "3/5" && b.fraction(1) == "1/5" && b.fraction(2) == "1/5",
            "Banzhaf fractions");
  o.require(s.fraction(0) == "2/3" && s.fraction(1) == "1/6" && s.fraction(2) == "1/6",
            "Shapley-Shubik fractions");
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(1, 10), weight(0, 9);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    std::vector<double> w(n);
    double total = 0;
    for (double& x : w) total += (x = weight(rng));
    std::uniform_int_distribution<int> q(1, std::max(1, static_cast<int>(total)));
    const WeightedVotingGame g(w, q(rng));
    if (banzhaf(g).raw == oracle::banzhaf_swings(w, g.quota())) ++agree;
  }
  o.require(agree == 200, std::to_string(200 - agree) + " random games disagree");
  if (o.ok) o.detail = "(3/5,1/5,1/5) (2/3,1/6,1/6); 200/200 random agree";
  return o;
}

Outcome ac9() {
  Outcome o;
  o.require(log_odds_weights(std::vector<double>{0.5}).w[0] == 0.0, "w(0.5) != 0");
  o.require(jury_probability<Rational>(3, Rational(3, 5)) == Rational(81, 125), "jury(3,0.6)");
  o.require(jury_probability<Rational>(5, Rational(3, 5)) == parse_rational("0.68256"),
            "jury(5,0.6)");
  for (int k = 11; k <= 19; ++k) {
    const Rational p(k, 20);
    for (std::size_t n = 1; n + 2 <= 19; n += 2)
      o.require(jury_probability<Rational>(n + 2, p) > jury_probability<Rational>(n, p),
                "not monotone at p=" + std::to_string(k) + "/20 n=" + std::to_string(n));
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> comp(0.5, 0.95), weight(0.0, 5.0);
  double worst_gap = -1.0;  // largest (random - log-odds); must stay <= 1e-12
  for (int profile = 0; profile < 50; ++profile) {
    std::vector<double> p(5);
    for (double& x : p) x = comp(rng);
    const auto prof = log_odds_weights(p);
    const double best = jury_probability_weighted<double>(prof.w, p);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> w(5);
      for (double& x : w) x = weight(rng);
      worst_gap = std::max(worst_gap, jury_probability_weighted<double>(w, p) - best);
    }
  }
  o.require(worst_gap <= 1e-12, "random weights beat log-odds by " + std::to_string(worst_gap));
  if (o.ok) o.detail = "81/125, 0.68256, monotone, log-odds optimal over 50x200";
  return o;
}

// Plays the solver's move for `me` against every opponent continuation.
bool never_loses(ttt::Solver& solver, ttt::Board b, ttt::Mark me) {
  if (ttt::terminal(b)) {
    const ttt::Mark w = ttt::winner(b);
    return w == ttt::Mark::kEmpty || w == me;
  }
  if (ttt::to_move(b) == me) {
    b[*solver.best_move(b)] = me;
    return never_loses(solver, b, me);
  }
  for (std::size_t i = 0; i < 9; ++i)
    if (b[i] == ttt::Mark::kEmpty) {
      ttt::Board next = b;
      next[i] = ttt::to_move(b);
      if (!never_loses(solver, next, me)) return false;
    }
  return true;
}

Outcome ac10() {
  Outcome o;
  int code = 0;
  const std::string out = cli_out({"ttt"}, &code);
  o.require(code == 0, "exit code");
  o.require(out.find("naive_fill_count 362880\n") != std::string::npos, "naive_fill_count");
  o.require(out.find("encoding_bound 19683\n") != std::string::npos, "encoding_bound");
  // Independent count: depth-first over string boards with a visited set.
  std::set<std::string> seen;
  std::vector<std::string> stack{std::string(9, '.')};
  seen.insert(stack.back());
  static const int lines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                  {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
  while (!stack.empty()) {
    const std::string b = stack.back();
    stack.pop_back();
    bool won = false;
    for (auto& l : lines) won = won || (b[l[0]] != '.' && b[l[0]] == b[l[1]] && b[l[1]] == b[l[2]]);
    if (won) continue;
    const auto xs = std::count(b.begin(), b.end(), 'X'), os = std::count(b.begin(), b.end(), 'O');
    for (std::size_t i = 0; i < 9; ++i)
      if (b[i] == '.') {
        std::string n = b;
        n[i] = xs == os ? 'X' : 'O';
        if (seen.insert(n).second) stack.push_back(n);
      }
  }
  const std::string expect = "reachable_states " + std::to_string(seen.size()) + "\n";
  o.require(out.find(expect) != std::string::npos, "reachable_states differs from oracle");
  ttt::Solver solver;
  o.require(never_loses(solver, ttt::Board{}, ttt::Mark::kX), "X policy loses");
  o.require(never_loses(solver, ttt::Board{}, ttt::Mark::kO), "O policy loses");
  if (o.ok) o.detail = "362880 19683, reachable " + std::to_string(seen.size()) + ", never loses";
  return o;
}

Outcome ac11() {
  Outcome o;
  std::mt19937_64 rng(11);
  int hits = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const GameTree t = oracle::random_normalizable_tree(rng, 4);
    const auto r = backward_induction(t);
    const BimatrixGame g = to_normal_form(t);
    if (nash_payoffs(g).count({r.payoffs[0], r.payoffs[1]})) ++hits;
  }
  o.require(hits == 500, std::to_string(500 - hits) + " trees where induction payoff is not a NE payoff");
  if (o.ok) o.detail = "500/500 trees";
  return o;
}

Outcome ac12() {
  Outcome o;
  const BimatrixGame pd = canonical(NamedGame::kPrisonersDilemma);
  namespace st = strategies;
  const auto a = play_match(st::tit_for_tat(), st::always_d(), pd, 10, 0).scores;
  o.require(a == std::pair{19.0, 22.0}, "TFT vs AlwaysD");
  const auto b = play_match(st::tit_for_tat(), st::tit_for_tat(), pd, 10, 0).scores;
  o.require(b == std::pair{30.0, 30.0}, "TFT self-play");
  const std::vector<std::string> args{"ipd", "--rounds", "100", "--strategies",
                                      "TitForTat,AlwaysD,AlwaysC,GrimTrigger,RandomP(0.5)",
                                      "--seed", "12345"};
  const std::string t1 = cli_out(args), t2 = cli_out(args);
  o.require(!t1.empty() && t1 == t2, "tournament tables differ");
  if (o.ok) o.detail = "(19,22) (30,30), identical tables";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "zero-sum pure saddle example", 1.0, ac1},
      {2, "2x2 closed-form indifference", 5.0, ac2},
      {3, "single pure equilibrium example", 0, ac3},
      {4, "named symmetric games", 0, ac4},
      {5, "Hostage and Kamikaze", 0, ac5},
      {6, "ordinal classification", 1.0, ac6},
      {7, "oddness on tie-free games", 10.0, ac7},
      {8, "power indices", 0, ac8},
      {9, "log-odds weights and jury", 0, ac9},
      {10, "tic-tac-toe census", 30.0, ac10},
      {11, "backward induction vs normal form", 10.0, ac11},
      {12, "iterated prisoner's dilemma", 0, ac12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    if (!o.ok) ++failures;
    const std::string limit =
        c.time_limit_s > 0 ? "< " + std::to_string(static_cast<int>(c.time_limit_s)) + "s" : "";
    std::printf("AC%-2d %s  %-36s %8.3fs %-6s %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                limit.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
