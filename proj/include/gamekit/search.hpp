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

#ifndef GAMEKIT_SEARCH_HPP_
#define GAMEKIT_SEARCH_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <ranges>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gamekit {

// A state space explored by best_first_search. rank() is lower-is-better.
template <class P>
concept PuzzleSpace = requires(const P& p, const typename P::State& s) {
  typename P::State;
  typename P::Move;
  { p.initial() } -> std::convertible_to<typename P::State>;
  { p.is_goal(s) } -> std::convertible_to<bool>;
  { p.rank(s) } -> std::convertible_to<double>;
  { p.successors(s) } -> std::ranges::input_range;
};

enum class SearchStatus { kFound, kBudgetExhausted, kNotFound };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kBudgetExhausted: return "budget exhausted";
    case SearchStatus::kNotFound: return "not found";
  }
  return "?";
}

template <class State>
struct SearchNodeInfo {
  State state;
  double rank = 0;
  std::size_t depth = 0;
};

template <class State, class Move>
struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::vector<Move> path;                        // when found
  std::size_t expansions = 0;
  std::vector<SearchNodeInfo<State>> expanded;   // in expansion order
  std::vector<SearchNodeInfo<State>> frontier;   // remaining, best first
};

inline constexpr std::size_t kUnlimitedExpansions = std::numeric_limits<std::size_t>::max();

// Best-first expansion: always expand the lowest-ranked frontier node, ties
// broken by insertion order. The goal test runs when a node is taken off the
// frontier. When State is hashable, states already expanded are skipped.
template <PuzzleSpace P>
SearchResult<typename P::State, typename P::Move> best_first_search(
    const P& space, std::size_t max_expansions = kUnlimitedExpansions) {
  using State = typename P::State;
  using Move = typename P::Move;
  constexpr bool kHashable = requires(const State& s) {
    { std::hash<State>{}(s) } -> std::convertible_to<std::size_t>;
    { s == s } -> std::convertible_to<bool>;
  };

  struct Node {
    State state;
    std::size_t parent;
    Move move;
    std::size_t depth;
    double rank;
  };
  struct Entry {
    double rank;
    std::size_t seq;
    bool operator>(const Entry& o) const {
      return rank != o.rank ? rank > o.rank : seq > o.seq;
    }
  };

  constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();
  std::vector<Node> nodes;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  auto push = [&](State s, std::size_t parent, Move m, std::size_t depth) {
    const double r = static_cast<double>(space.rank(s));
    nodes.push_back({std::move(s), parent, std::move(m), depth, r});
    open.push({r, nodes.size() - 1});
  };

  [[maybe_unused]] std::conditional_t<kHashable, std::unordered_set<State>, int> closed{};
  SearchResult<State, Move> res;
  push(space.initial(), kNoParent, Move{}, 0);

  while (!open.empty()) {
    const Entry top = open.top();
    const std::size_t id = top.seq;
    if (space.is_goal(nodes[id].state)) {
      res.status = SearchStatus::kFound;
      for (std::size_t i = id; nodes[i].parent != kNoParent; i = nodes[i].parent)
        res.path.push_back(nodes[i].move);
      std::reverse(res.path.begin(), res.path.end());
      break;
    }
    if (res.expansions >= max_expansions) {
      res.status = SearchStatus::kBudgetExhausted;
      break;
    }
    open.pop();
    if constexpr (kHashable) {
      if (!closed.insert(nodes[id].state).second) continue;
    }
    ++res.expansions;
    res.expanded.push_back({nodes[id].state, nodes[id].rank, nodes[id].depth});
    for (auto&& [move, next] : space.successors(nodes[id].state))
      push(next, id, move, nodes[id].depth + 1);
  }

  if (res.status != SearchStatus::kFound) {
    if (open.empty()) res.status = SearchStatus::kNotFound;
    while (!open.empty()) {
      const Node& n = nodes[open.top().seq];
      res.frontier.push_back({n.state, n.rank, n.depth});
      open.pop();
    }
  }
  return res;
}

}  // namespace gamekit

#endif  // GAMEKIT_SEARCH_HPP_
