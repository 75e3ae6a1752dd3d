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

#ifndef GAMEKIT_TOOLS_GAMEKIT_CLI_HPP_
#define GAMEKIT_TOOLS_GAMEKIT_CLI_HPP_

// Command-line front end. run() is separate from main() so tests can drive
// it with in-memory streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gamekit/gamekit.hpp"

namespace gamekit::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kDomainFailure = 1, kUsageFailure = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Worker threads for coalition enumeration; GAMEKIT_THREADS, default 1.
inline std::size_t thread_budget() {
  const char* env = std::getenv("GAMEKIT_THREADS");
  if (!env) return 1;
  auto v = text::to_integer(env);
  if (!v || *v < 1) throw UsageError("GAMEKIT_THREADS must be a positive integer");
  return static_cast<std::size_t>(*v);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto part : text::split(s, ','))
    if (!part.empty()) out.emplace_back(part);
  return out;
}

inline std::string cell_name(const BimatrixGame& g, Cell c) {
  return "(" + g.label(Player::kRow, c.row) + "," + g.label(Player::kCol, c.col) + ")";
}

inline std::string pair_text(double a, double b) {
  return "(" + text::sig6(a) + "," + text::sig6(b) + ")";
}

inline std::string mix_text(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + text::fixed6(v[i]);
  return s + ")";
}

// Collects text lines and a JSON mirror of the same content.
struct Output {
  std::ostringstream text;
  json doc = json::object();
};

// ---------------------------------------------------------------------------

inline void cmd_solve_zerosum(const std::string& path, Output& o) {
  const BimatrixGame g = parse_game(read_file(path));
  if (!is_zero_sum(g)) throw DomainError("'solve zerosum' needs a zero-sum game");
  const Solution s = solve_zero_sum(g);
  if (s.kind == SolutionKind::kPure) {
    o.text << "pure saddle: " << cell_name(g, s.cell) << " value " << text::sig6(s.row_value)
           << '\n';
    o.doc = {{"kind", "pure"},
             {"row", g.label(Player::kRow, s.cell.row)},
             {"col", g.label(Player::kCol, s.cell.col)},
             {"value", s.row_value}};
  } else {
    o.text << "mixed solution: row " << mix_text(s.row_mix) << " col " << mix_text(s.col_mix)
           << " value " << text::sig6(s.row_value) << '\n';
    o.doc = {{"kind", "mixed"},
             {"row_mix", s.row_mix},
             {"col_mix", s.col_mix},
             {"x", s.x()},
             {"y", s.y()},
             {"value", s.row_value}};
  }
}

inline void cmd_solve_nash(const std::string& path, bool mixed, Output& o) {
  const BimatrixGame g = parse_game(read_file(path));
  const EquilibriumReport rep = equilibrium_report(g);
  json pure = json::array();
  if (rep.pure.empty()) o.text << "pure NE: none\n";
  for (const auto& e : rep.pure) {
    o.text << "pure NE: " << cell_name(g, e.cell) << " payoffs "
           << pair_text(e.row_payoff, e.col_payoff) << '\n';
    pure.push_back({{"row", g.label(Player::kRow, e.cell.row)},
                    {"col", g.label(Player::kCol, e.cell.col)},
                    {"payoffs", {e.row_payoff, e.col_payoff}}});
  }
  o.doc["pure"] = pure;
  if (!mixed) return;
  if (!rep.mixed_computed) {
    o.text << "mixed NE: not computed for " << g.rows() << "x" << g.cols() << " games\n";
    o.text << "equilibria: " << rep.pure.size() << " pure\n";
    o.doc["mixed"] = nullptr;
    o.doc["mixed_computed"] = false;
    o.doc["pure_count"] = rep.pure.size();
    return;
  }
  o.doc["mixed_computed"] = true;
  if (rep.mixed) {
    const Solution& s = *rep.mixed;
    o.text << "mixed NE: x=" << text::fixed6(s.x()) << " y=" << text::fixed6(s.y())
           << " payoffs " << pair_text(s.row_value, s.col_value) << '\n';
    o.doc["mixed"] = {{"x", s.x()}, {"y", s.y()}, {"payoffs", {s.row_value, s.col_value}}};
  } else {
    o.text << "mixed NE: none" << (rep.mixed_degenerate ? " (degenerate indifference system)" : "")
           << '\n';
    o.doc["mixed"] = nullptr;
  }
  o.doc["mixed_degenerate"] = rep.mixed_degenerate;
  o.text << "equilibria: " << rep.total_count
         << (rep.even_count_warning ? " (even: degenerate game warning)" : " (odd)") << '\n';
  o.doc["total_count"] = rep.total_count;
  o.doc["even_count_warning"] = rep.even_count_warning;
}

inline void cmd_solve_maximin(const std::string& path, Output& o) {
  const BimatrixGame g = parse_game(read_file(path));
  const MaximinOutcome m = maximin_outcome(g);
  o.text << "row security: " << g.label(Player::kRow, m.row.strategy) << " "
         << text::sig6(m.row.value) << '\n';
  o.text << "col security: " << g.label(Player::kCol, m.col.strategy) << " "
         << text::sig6(m.col.value) << '\n';
  o.text << "maximin outcome: " << cell_name(g, m.cell) << " payoffs "
         << pair_text(m.row_payoff, m.col_payoff) << " "
         << (m.consistent ? "(consistent with securities)" : "(not consistent with securities)") << '\n';
  o.doc = {{"row_security", {{"strategy", g.label(Player::kRow, m.row.strategy)}, {"value", m.row.value}}},
           {"col_security", {{"strategy", g.label(Player::kCol, m.col.strategy)}, {"value", m.col.value}}},
           {"outcome", {{"row", g.label(Player::kRow, m.cell.row)},
                        {"col", g.label(Player::kCol, m.cell.col)},
                        {"payoffs", {m.row_payoff, m.col_payoff}}}},
           {"consistent", m.consistent}};
}

inline void cmd_dominance(const std::string& path, const std::string& mode, Output& o) {
  const BimatrixGame g = parse_game(read_file(path));
  const Dominance d = mode == "weak" ? Dominance::kWeak : Dominance::kStrict;
  const EliminationResult r = eliminate_dominated(g, d);
  json trace = json::array();
  for (const auto& rm : r.trace) {
    o.text << "round " << rm.round << ": remove " << to_string(rm.player) << " "
           << g.label(rm.player, rm.index) << '\n';
    trace.push_back({{"round", rm.round},
                     {"player", to_string(rm.player)},
                     {"strategy", g.label(rm.player, rm.index)}});
  }
  if (r.trace.empty()) o.text << "no dominated strategies\n";
  o.text << "remaining: " << r.reduced.rows() << "x" << r.reduced.cols() << '\n';
  o.text << format_game(r.reduced);
  o.doc = {{"mode", mode}, {"trace", trace}, {"reduced", format_game(r.reduced)}};
}

inline void cmd_classify(const std::string& path, Output& o) {
  const GameClass c = classify_game(parse_game(read_file(path)));
  o.text << to_string(c.kind) << " (" << c.ordering << ")\n";
  o.doc = {{"class", to_string(c.kind)}, {"ordering", c.ordering}};
}

inline void cmd_canonical(const std::string& name, Output& o) {
  auto which = named_game_from_string(name);
  if (!which)
    throw UsageError("unknown game '" + name +
                     "' (known: Leader, BattleOfSexes, Chicken, PrisonersDilemma, Hostage, "
                     "Kamikaze)");
  const std::string file = format_game(canonical(*which), display_name(*which));
  o.text << file;
  o.doc = {{"name", display_name(*which)}, {"game", file}};
}

inline void cmd_power(const std::string& path, const std::string& index, Output& o) {
  const VotingFile vf = parse_voting(read_file(path));
  const auto& v = vf.game;
  const PowerIndexResult r = index == "shapley" ? shapley_shubik(v, thread_budget())
                                                : banzhaf(v, thread_budget());
  const char* label = index == "shapley" ? "shapley-shubik" : "banzhaf";
  o.text << label << " index (exact), players " << v.size() << ", quota "
         << text::sig6(v.quota()) << '\n';
  if (!v.winnable()) o.text << "warning: quota exceeds total weight; no coalition wins\n";
  json players = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    o.text << "player " << i + 1 << ": weight " << text::sig6(v.weights()[i]) << " share "
           << text::fixed6(r.normalized[i]) << " (" << r.fraction(i) << ") raw " << r.raw[i]
           << '\n';
    players.push_back({{"weight", v.weights()[i]},
                       {"share", r.normalized[i]},
                       {"fraction", r.fraction(i)},
                       {"raw", r.raw[i]}});
  }
  o.doc = {{"index", label}, {"exact", true}, {"quota", v.quota()},
           {"winnable", v.winnable()}, {"players", players}};
}

inline std::vector<double> parse_number_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) {
    auto v = text::to_double(tok);
    if (!v) throw UsageError(std::string("bad number in ") + what + ": '" + tok + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError(std::string(what) + " must not be empty");
  return out;
}

inline void cmd_weights(const std::string& list, Output& o) {
  const auto p = parse_number_list(list, "--competencies");
  const CompetencyProfile prof = log_odds_weights(p);
  json voters = json::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    o.text << "voter " << k + 1 << ": p " << text::sig6(prof.p[k]) << " w "
           << text::sig6(prof.w[k]) << '\n';
    voters.push_back({{"p", prof.p[k]}, {"w", prof.w[k]}});
  }
  o.doc = {{"voters", voters}};
}

inline void cmd_wmr(const std::string& weights, const std::string& votes, Output& o) {
  const auto w = parse_number_list(weights, "--weights");
  std::vector<int> v;
  for (double x : parse_number_list(votes, "--votes")) {
    if (x != 1.0 && x != -1.0) throw UsageError("votes must be +1 or -1");
    v.push_back(static_cast<int>(x));
  }
  const Decision d = wmr_decide(w, v);
  o.text << "decision: " << to_string(d) << '\n';
  o.doc = {{"decision", to_string(d)}};
}

inline void cmd_jury_homogeneous(long long n, const std::string& p_text, Output& o) {
  if (n < 1 || n % 2 == 0) throw DomainError("--n must be odd and >= 1");
  Rational p;
  if (!try_parse_rational(p_text, p)) throw UsageError("--p must be a decimal number");
  const Rational exact = jury_probability(static_cast<std::size_t>(n), p);
  const double value = to_double(exact);
  o.text << text::fixed6(value) << " (" << to_fraction_string(exact) << ")\n";
  o.doc = {{"n", n}, {"p", to_double(p)}, {"probability", value},
           {"fraction", to_fraction_string(exact)}};
}

inline constexpr std::size_t kExactJuryFractionLimit = 12;

inline void cmd_jury_file(const std::string& path, Output& o) {
  const VotingFile vf = parse_voting(read_file(path));
  if (!vf.competencies) throw DomainError("voting file has no 'competencies:' line");
  const auto& p = *vf.competencies;
  const CompetencyProfile prof = log_odds_weights(p);
  const std::vector<double>& w = vf.game.weights();
  auto report = [&](const char* name, const std::vector<double>& weights) {
    const double value = jury_probability_weighted<double>(weights, p);
    o.text << name << ": " << text::fixed6(value);
    json entry = {{"probability", value}};
    if (p.size() <= kExactJuryFractionLimit) {
      std::vector<Rational> exact_p;
      for (const auto& t : vf.competency_text) exact_p.push_back(parse_rational(t));
      const Rational exact = jury_probability_weighted<Rational>(weights, exact_p);
      o.text << " (" << to_fraction_string(exact) << ")";
      entry["fraction"] = to_fraction_string(exact);
    }
    o.text << '\n';
    o.doc[name] = entry;
  };
  report("weighted", w);
  report("log-odds", prof.w);
}

inline std::string path_text(const std::vector<std::string>& path) {
  if (path.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "," : "") + path[i];
  return s;
}

inline void cmd_tree_solve(const std::string& path, Output& o) {
  const GameTree t = parse_tree(read_file(path));
  const InductionResult r = backward_induction(t);
  o.text << "value (";
  for (std::size_t i = 0; i < r.payoffs.size(); ++i) o.text << (i ? "," : "") << text::sig6(r.payoffs[i]);
  o.text << ") path " << path_text(r.path) << '\n';
  o.doc = {{"payoffs", r.payoffs}, {"path", r.path}};
}

inline void cmd_tree_normalize(const std::string& path, Output& o) {
  const GameTree t = parse_tree(read_file(path));
  const std::string file = format_game(to_normal_form(t));
  o.text << file;
  o.doc = {{"game", file}};
}

inline void cmd_ttt(bool search, std::size_t max_expansions, Output& o) {
  const ttt::Census c = ttt::enumerate_tictactoe();
  o.text << "naive_fill_count " << c.naive_fill_count << '\n'
         << "encoding_bound " << c.encoding_bound << '\n'
         << "reachable_states " << c.reachable_states << '\n'
         << "terminal_states " << c.terminal_states << " (x_wins " << c.x_wins << ", o_wins "
         << c.o_wins << ", draws " << c.draws << ")\n"
         << "game_value " << ttt::to_string(c.game_value) << '\n';
  o.doc = {{"naive_fill_count", c.naive_fill_count}, {"encoding_bound", c.encoding_bound},
           {"reachable_states", c.reachable_states}, {"terminal_states", c.terminal_states},
           {"x_wins", c.x_wins}, {"o_wins", c.o_wins}, {"draws", c.draws},
           {"game_value", ttt::to_string(c.game_value)}};
  if (!search) return;
  const auto r = best_first_search(ttt::XWinPuzzle{}, max_expansions);
  o.text << "search: " << to_string(r.status) << ", expansions " << r.expansions;
  json sdoc = {{"status", to_string(r.status)}, {"expansions", r.expansions}};
  if (r.status == SearchStatus::kFound) {
    o.text << ", X moves";
    for (std::size_t m : r.path) o.text << ' ' << m;
    sdoc["path"] = r.path;
  } else {
    o.text << ", frontier " << r.frontier.size();
    sdoc["frontier"] = r.frontier.size();
  }
  o.text << '\n';
  std::size_t k = 0;
  for (const auto& e : r.expanded)
    o.text << "  expand " << ++k << ": " << ttt::to_string(ttt::decode(e.state)) << " rank "
           << text::sig6(e.rank) << '\n';
  o.doc["search"] = sdoc;
}

inline void cmd_ipd(std::size_t rounds, const std::string& names, std::uint64_t seed, bool csv,
                    const std::string& game_path, Output& o) {
  const BimatrixGame g = game_path.empty() ? canonical(NamedGame::kPrisonersDilemma)
                                           : parse_game(read_file(game_path));
  std::vector<StrategyAutomaton> players;
  for (const auto& n : split_list(names)) players.push_back(strategies::from_name(n));
  if (rounds < 1) throw DomainError("--rounds must be >= 1");
  const TournamentTable t = tournament(players, g, rounds, seed);
  o.text << (csv ? format_csv(t) : format_table(t));
  o.doc = {{"rounds", rounds}, {"seed", seed}, {"strategies", t.names},
           {"scores", t.scores}, {"totals", t.totals}};
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gamekit: solve, classify and simulate finite games", "gamekit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit JSON instead of text");

  std::string file, name, index = "banzhaf", mode = "strict", competencies, weights, votes,
                          strategies_arg, game_path;
  bool mixed = false, csv = false, search = false;
  long long jury_n = 0;
  std::string jury_p;
  std::size_t rounds = 0, max_expansions = kUnlimitedExpansions;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Solve a normal-form game");
  solve->require_subcommand(1);
  auto* zerosum = solve->add_subcommand("zerosum", "Minimax solution of a zero-sum game");
  zerosum->add_option("file", file, "Game file")->required();
  auto* nash = solve->add_subcommand("nash", "Pure (and 2x2 mixed) Nash equilibria");
  nash->add_option("file", file, "Game file")->required();
  nash->add_flag("--mixed", mixed, "Also compute the 2x2 mixed equilibrium and the count");
  auto* maximin = solve->add_subcommand("maximin", "Pure security strategies of both players");
  maximin->add_option("file", file, "Game file")->required();

  auto* dominance = app.add_subcommand("dominance", "Iterated elimination of dominated strategies");
  dominance->add_option("file", file, "Game file")->required();
  dominance->add_option("--mode", mode, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));

  auto* classify_cmd = app.add_subcommand("classify", "Classify a symmetric 2x2 game");
  classify_cmd->add_option("file", file, "Game file")->required();

  auto* canonical_cmd = app.add_subcommand("canonical", "Print a named game as a game file");
  canonical_cmd->add_option("name", name, "Leader|BattleOfSexes|Chicken|PrisonersDilemma|Hostage|Kamikaze")
      ->required();

  auto* power = app.add_subcommand("power", "Exact power indices of a weighted voting game");
  power->add_option("file", file, "Voting file")->required();
  power->add_option("--index", index, "banzhaf or shapley")
      ->check(CLI::IsMember({"banzhaf", "shapley"}));

  auto* weights_cmd = app.add_subcommand("weights", "Log-odds voting weights");
  weights_cmd->add_option("--competencies", competencies, "Comma-separated p values")->required();

  auto* wmr = app.add_subcommand("wmr", "Weighted majority decision");
  wmr->add_option("--weights", weights, "Comma-separated weights")->required();
  wmr->add_option("--votes", votes, "Comma-separated +1/-1 votes")->required();

  auto* jury = app.add_subcommand("jury", "Probability that the majority is correct");
  auto* jury_n_opt = jury->add_option("--n", jury_n, "Odd number of voters");
  auto* jury_p_opt = jury->add_option("--p", jury_p, "Common competency");
  auto* jury_file_opt = jury->add_option("--file", file, "Voting file with competencies");
  jury_n_opt->needs(jury_p_opt);
  jury_p_opt->needs(jury_n_opt);
  jury_file_opt->excludes(jury_n_opt)->excludes(jury_p_opt);

  auto* tree = app.add_subcommand("tree", "Extensive-form game trees");
  tree->require_subcommand(1);
  auto* tree_solve = tree->add_subcommand("solve", "Backward induction");
  tree_solve->add_option("file", file, "Tree file")->required();
  auto* tree_normalize = tree->add_subcommand("normalize", "Induced normal form");
  tree_normalize->add_option("file", file, "Tree file")->required();

  auto* ttt_cmd = app.add_subcommand("ttt", "Exhaustive tic-tac-toe census");
  ttt_cmd->add_flag("--search", search, "Best-first search for an X win against fixed replies");
  ttt_cmd->add_option("--max-expansions", max_expansions, "Expansion budget for --search");

  auto* ipd = app.add_subcommand("ipd", "Iterated 2x2 round-robin tournament");
  ipd->add_option("--rounds", rounds, "Rounds per match")->required();
  ipd->add_option("--strategies", strategies_arg, "Comma-separated strategy names")->required();
  ipd->add_option("--seed", seed, "Random seed");
  ipd->add_flag("--csv", csv, "CSV output");
  ipd->add_option("--game", game_path, "Symmetric 2x2 game file (default: Prisoner's Dilemma)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageFailure;
  }

  Output o;
  try {
    if (zerosum->parsed()) cmd_solve_zerosum(file, o);
    else if (nash->parsed()) cmd_solve_nash(file, mixed, o);
    else if (maximin->parsed()) cmd_solve_maximin(file, o);
    else if (dominance->parsed()) cmd_dominance(file, mode, o);
    else if (classify_cmd->parsed()) cmd_classify(file, o);
    else if (canonical_cmd->parsed()) cmd_canonical(name, o);
    else if (power->parsed()) cmd_power(file, index, o);
    else if (weights_cmd->parsed()) cmd_weights(competencies, o);
    else if (wmr->parsed()) cmd_wmr(weights, votes, o);
    else if (jury->parsed()) {
      if (!file.empty()) cmd_jury_file(file, o);
      else if (*jury_n_opt) cmd_jury_homogeneous(jury_n, jury_p, o);
      else throw UsageError("jury needs either --n and --p, or --file");
    } else if (tree_solve->parsed()) cmd_tree_solve(file, o);
    else if (tree_normalize->parsed()) cmd_tree_normalize(file, o);
    else if (ttt_cmd->parsed()) cmd_ttt(search, max_expansions, o);
    else if (ipd->parsed()) cmd_ipd(rounds, strategies_arg, seed, csv, game_path, o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  if (json_mode) out << o.doc.dump(2) << '\n';
  else out << o.text.str();
  return kOk;
}

}  // namespace gamekit::cli

#endif  // GAMEKIT_TOOLS_GAMEKIT_CLI_HPP_
