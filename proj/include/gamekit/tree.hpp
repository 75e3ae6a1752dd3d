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

#ifndef GAMEKIT_TREE_HPP_
#define GAMEKIT_TREE_HPP_

// Extensive-form games: player-labelled decision nodes, move-labelled edges,
// information sets and payoff leaves. No chance nodes.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamekit/bimatrix.hpp"
#include "gamekit/common.hpp"

namespace gamekit {

inline constexpr std::size_t kMaxStrategiesPerPlayer = 12;

struct TreeEdge {
  std::string label;
  std::size_t child = 0;  // node index
};

struct TreeNode {
  long long id = 0;  // user-facing id
  bool leaf = false;
  int player = 0;                // 1-based, decision nodes only
  std::vector<TreeEdge> edges;   // sorted by label
  std::vector<double> payoffs;   // leaves only, one per player
  std::size_t info_set = 0;      // decision nodes only
};

struct InfoSet {
  int player = 0;
  std::vector<std::size_t> nodes;   // node indices
  std::vector<std::string> moves;   // sorted labels shared by every member
};

class GameTree {
 public:
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t root() const { return root_; }
  const std::vector<InfoSet>& info_sets() const { return info_sets_; }
  std::size_t num_players() const { return num_players_; }

 private:
  friend class TreeBuilder;
  std::vector<TreeNode> nodes_;
  std::size_t root_ = 0;
  std::vector<InfoSet> info_sets_;  // ordered by their first member's index
  std::size_t num_players_ = 0;
};

// Collects nodes, edges and information sets by user id and validates them
// into a GameTree. Decision nodes not named in any information set form a
// singleton set.
class TreeBuilder {
 public:
  TreeBuilder& decision(long long id, int player) {
    add_node(id).player = player;
    return *this;
  }
  TreeBuilder& leaf(long long id, std::vector<double> payoffs) {
    TreeNode& n = add_node(id);
    n.leaf = true;
    n.payoffs = std::move(payoffs);
    return *this;
  }
  TreeBuilder& edge(long long from, long long to, std::string label) {
    edges_.push_back({from, to, std::move(label)});
    return *this;
  }
  TreeBuilder& info_set(std::vector<long long> ids) {
    sets_.push_back(std::move(ids));
    return *this;
  }
  TreeBuilder& root(long long id) {
    root_ = id;
    return *this;
  }

  GameTree build() const {
    GameTree t;
    t.nodes_ = nodes_;
    const std::size_t n = nodes_.size();
    if (n == 0) throw DomainError("tree has no nodes");

    std::vector<int> parents(n, 0);
    for (const auto& e : edges_) {
      const std::size_t from = index_of(e.from, "edge source");
      const std::size_t to = index_of(e.to, "edge target");
      TreeNode& src = t.nodes_[from];
      if (src.leaf) throw DomainError("leaf " + std::to_string(e.from) + " cannot have edges");
      if (e.label.empty()) throw DomainError("edge label must be non-empty");
      for (const auto& existing : src.edges)
        if (existing.label == e.label)
          throw DomainError("node " + std::to_string(e.from) + " has duplicate move '" +
                            e.label + "'");
      src.edges.push_back({e.label, to});
      ++parents[to];
    }
    for (auto& node : t.nodes_)
      std::sort(node.edges.begin(), node.edges.end(),
                [](const TreeEdge& a, const TreeEdge& b) { return a.label < b.label; });

    // Root and tree shape.
    if (root_) {
      t.root_ = index_of(*root_, "root");
    } else {
      std::vector<std::size_t> roots;
      for (std::size_t i = 0; i < n; ++i)
        if (parents[i] == 0) roots.push_back(i);
      if (roots.size() != 1) throw DomainError("cannot infer root: specify 'root <id>'");
      t.root_ = roots.front();
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int expected = i == t.root_ ? 0 : 1;
      if (parents[i] != expected)
        throw DomainError("node " + std::to_string(nodes_[i].id) +
                          (expected == 0 ? " is the root but has a parent"
                                         : " must have exactly one parent, has " +
                                               std::to_string(parents[i])));
    }
    // Every node has one parent and the root none, so reachability of all
    // nodes from the root rules out cycles.
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{t.root_};
    std::size_t reached = 0;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (seen[i]) continue;
      seen[i] = true;
      ++reached;
      for (const auto& e : t.nodes_[i].edges) stack.push_back(e.child);
    }
    if (reached != n) throw DomainError("tree contains a cycle or nodes unreachable from the root");

    // Players and payoffs.
    std::optional<std::size_t> players;
    for (const auto& node : t.nodes_) {
      if (!node.leaf) continue;
      if (node.payoffs.empty())
        throw DomainError("leaf " + std::to_string(node.id) + " has no payoffs");
      if (players && *players != node.payoffs.size())
        throw DomainError("leaf " + std::to_string(node.id) + " has " +
                          std::to_string(node.payoffs.size()) + " payoffs, expected " +
                          std::to_string(*players));
      for (double v : node.payoffs)
        if (!std::isfinite(v)) throw DomainError("payoffs must be finite");
      players = node.payoffs.size();
    }
    t.num_players_ = players.value_or(0);
    for (const auto& node : t.nodes_) {
      if (node.leaf) continue;
      if (node.edges.empty())
        throw DomainError("decision node " + std::to_string(node.id) + " has no moves");
      if (node.player < 1 || static_cast<std::size_t>(node.player) > t.num_players_)
        throw DomainError("decision node " + std::to_string(node.id) + " names player " +
                          std::to_string(node.player) + " but leaves carry " +
                          std::to_string(t.num_players_) + " payoffs");
    }

    // Information sets.
    constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> declared(n, kUnassigned);
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (sets_[s].empty()) throw DomainError("empty information set");
      for (long long id : sets_[s]) {
        const std::size_t i = index_of(id, "information set member");
        if (t.nodes_[i].leaf)
          throw DomainError("leaf " + std::to_string(id) + " cannot be in an information set");
        if (declared[i] != kUnassigned)
          throw DomainError("node " + std::to_string(id) + " is in two information sets");
        declared[i] = s;
      }
    }
    std::vector<std::size_t> set_index(sets_.size(), kUnassigned);
    for (std::size_t i = 0; i < n; ++i) {
      TreeNode& node = t.nodes_[i];
      if (node.leaf) continue;
      std::size_t target;
      if (declared[i] == kUnassigned) {
        target = t.info_sets_.size();
        t.info_sets_.push_back({node.player, {}, {}});
      } else if (set_index[declared[i]] == kUnassigned) {
        target = set_index[declared[i]] = t.info_sets_.size();
        t.info_sets_.push_back({node.player, {}, {}});
      } else {
        target = set_index[declared[i]];
      }
      InfoSet& set = t.info_sets_[target];
      std::vector<std::string> moves;
      for (const auto& e : node.edges) moves.push_back(e.label);
      if (set.nodes.empty()) {
        set.moves = std::move(moves);
      } else {
        if (set.player != node.player)
          throw DomainError("information set mixes players (node " + std::to_string(node.id) +
                            ")");
        if (set.moves != moves)
          throw DomainError("information set members offer different moves (node " +
                            std::to_string(node.id) + ")");
      }
      set.nodes.push_back(i);
      node.info_set = target;
    }
    return t;
  }

 private:
  struct PendingEdge {
    long long from, to;
    std::string label;
  };

  TreeNode& add_node(long long id) {
    if (index_.count(id)) throw DomainError("duplicate node id " + std::to_string(id));
    index_[id] = nodes_.size();
    nodes_.push_back({});
    nodes_.back().id = id;
    return nodes_.back();
  }

  std::size_t index_of(long long id, const char* role) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw DomainError(std::string(role) + " refers to unknown node " + std::to_string(id));
    return it->second;
  }

  std::vector<TreeNode> nodes_;
  std::map<long long, std::size_t> index_;
  std::vector<PendingEdge> edges_;
  std::vector<std::vector<long long>> sets_;
  std::optional<long long> root_;
};

inline bool is_perfect_information(const GameTree& t) {
  return std::all_of(t.info_sets().begin(), t.info_sets().end(),
                     [](const InfoSet& s) { return s.nodes.size() == 1; });
}

struct InductionResult {
  std::vector<double> payoffs;
  std::vector<std::string> path;  // move labels from the root
};

// Each decision node takes the child that maximises the mover's own payoff;
// ties go to the alphabetically first move label.
inline InductionResult backward_induction(const GameTree& t) {
  if (!is_perfect_information(t))
    throw DomainError(
        "backward induction needs perfect information; use to_normal_form for games with "
        "non-singleton information sets");
  // Post-order fold, iterative to avoid deep recursion.
  const auto& nodes = t.nodes();
  std::vector<std::vector<double>> value(nodes.size());
  std::vector<std::size_t> choice(nodes.size(), 0);
  std::vector<std::pair<std::size_t, bool>> stack{{t.root(), false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    const TreeNode& node = nodes[i];
    if (node.leaf) {
      value[i] = node.payoffs;
      continue;
    }
    if (!expanded) {
      stack.push_back({i, true});
      for (const auto& e : node.edges) stack.push_back({e.child, false});
      continue;
    }
    const auto p = static_cast<std::size_t>(node.player - 1);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& e : node.edges) best = std::max(best, value[e.child][p]);
    for (std::size_t k = 0; k < node.edges.size(); ++k)
      if (less_or_equal(best, value[node.edges[k].child][p])) {
        choice[i] = k;
        break;
      }
    value[i] = value[node.edges[choice[i]].child];
  }
  InductionResult res{value[t.root()], {}};
  for (std::size_t i = t.root(); !nodes[i].leaf; i = nodes[i].edges[choice[i]].child)
    res.path.push_back(nodes[i].edges[choice[i]].label);
  return res;
}

// Pure strategies of one player: one move per information set of that player.
struct StrategySpace {
  std::vector<std::size_t> info_sets;  // indices into GameTree::info_sets()
  std::size_t count = 1;

  // Move index per listed info set; the first set is the most significant digit.
  std::vector<std::size_t> decode(const GameTree& t, std::size_t strategy) const {
    std::vector<std::size_t> digits(info_sets.size());
    for (std::size_t k = info_sets.size(); k-- > 0;) {
      const std::size_t radix = t.info_sets()[info_sets[k]].moves.size();
      digits[k] = strategy % radix;
      strategy /= radix;
    }
    return digits;
  }

  std::string label(const GameTree& t, std::size_t strategy) const {
    if (info_sets.empty()) return "-";
    auto digits = decode(t, strategy);
    std::string s;
    for (std::size_t k = 0; k < info_sets.size(); ++k) {
      if (k) s += '/';
      s += t.info_sets()[info_sets[k]].moves[digits[k]];
    }
    return s;
  }
};

inline StrategySpace strategy_space(const GameTree& t, int player) {
  StrategySpace sp;
  for (std::size_t s = 0; s < t.info_sets().size(); ++s) {
    if (t.info_sets()[s].player != player) continue;
    sp.info_sets.push_back(s);
    sp.count *= t.info_sets()[s].moves.size();
    if (sp.count > kMaxStrategiesPerPlayer)
      throw UnsupportedError("player " + std::to_string(player) + " has more than " +
                             std::to_string(kMaxStrategiesPerPlayer) + " pure strategies");
  }
  return sp;
}

// Induced normal form of a one- or two-player tree. In a one-player tree the
// column player has a single dummy strategy and zero payoffs.
inline BimatrixGame to_normal_form(const GameTree& t) {
  if (t.num_players() > 2)
    throw DomainError("to_normal_form needs a two-player tree, got " +
                      std::to_string(t.num_players()) + " players");
  const StrategySpace s1 = strategy_space(t, 1);
  const StrategySpace s2 = strategy_space(t, 2);
  Matrix a(s1.count, s2.count), b(s1.count, s2.count);
  std::vector<std::size_t> move(t.info_sets().size(), 0);
  for (std::size_t r = 0; r < s1.count; ++r) {
    auto d1 = s1.decode(t, r);
    for (std::size_t k = 0; k < d1.size(); ++k) move[s1.info_sets[k]] = d1[k];
    for (std::size_t c = 0; c < s2.count; ++c) {
      auto d2 = s2.decode(t, c);
      for (std::size_t k = 0; k < d2.size(); ++k) move[s2.info_sets[k]] = d2[k];
      std::size_t i = t.root();
      while (!t.node(i).leaf) i = t.node(i).edges[move[t.node(i).info_set]].child;
      const auto& pay = t.node(i).payoffs;
      a(r, c) = pay[0];
      b(r, c) = pay.size() > 1 ? pay[1] : 0.0;
    }
  }
  std::vector<std::string> rl, cl;
  for (std::size_t r = 0; r < s1.count; ++r) rl.push_back(s1.label(t, r));
  for (std::size_t c = 0; c < s2.count; ++c) cl.push_back(s2.label(t, c));
  return BimatrixGame(std::move(a), std::move(b), std::move(rl), std::move(cl));
}

}  // namespace gamekit

#endif  // GAMEKIT_TREE_HPP_
