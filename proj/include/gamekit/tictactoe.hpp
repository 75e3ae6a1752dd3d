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

#ifndef GAMEKIT_TICTACTOE_HPP_
#define GAMEKIT_TICTACTOE_HPP_

// Exhaustive tic-tac-toe: state counting, perfect-play values and a
// search-space adapter. Boards are raw 3x3 grids with no symmetry reduction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gamekit::ttt {

enum class Mark : std::uint8_t { kEmpty = 0, kX = 1, kO = 2 };
using Board = std::array<Mark, 9>;

inline constexpr std::size_t kEncodings = 19683;  // 3^9

inline constexpr std::array<std::array<int, 3>, 8> kLines{{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}}};

inline Mark winner(const Board& b) {
  for (const auto& l : kLines)
    if (b[l[0]] != Mark::kEmpty && b[l[0]] == b[l[1]] && b[l[1]] == b[l[2]]) return b[l[0]];
  return Mark::kEmpty;
}

inline bool full(const Board& b) {
  return std::none_of(b.begin(), b.end(), [](Mark m) { return m == Mark::kEmpty; });
}

inline bool terminal(const Board& b) { return winner(b) != Mark::kEmpty || full(b); }

// X moves first, so X is to move whenever the counts are equal.
inline Mark to_move(const Board& b) {
  auto xs = std::count(b.begin(), b.end(), Mark::kX);
  auto os = std::count(b.begin(), b.end(), Mark::kO);
  return xs == os ? Mark::kX : Mark::kO;
}

// Base-3 digits, cell 0 least significant.
inline std::uint32_t encode(const Board& b) {
  std::uint32_t code = 0;
  for (std::size_t i = 9; i-- > 0;) code = code * 3 + static_cast<std::uint32_t>(b[i]);
  return code;
}

inline Board decode(std::uint32_t code) {
  Board b{};
  for (auto& m : b) {
    m = static_cast<Mark>(code % 3);
    code /= 3;
  }
  return b;
}

inline std::string to_string(const Board& b) {
  std::string s;
  for (std::size_t i = 0; i < 9; ++i) {
    s += b[i] == Mark::kX ? 'X' : b[i] == Mark::kO ? 'O' : '.';
    if (i % 3 == 2 && i != 8) s += '/';
  }
  return s;
}

// Outcome under perfect play, from X's point of view.
enum class Outcome : std::int8_t { kOWin = -1, kDraw = 0, kXWin = 1 };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kOWin: return "O wins";
    case Outcome::kDraw: return "draw";
    case Outcome::kXWin: return "X wins";
  }
  return "?";
}

// Memoised minimax over every reachable position.
class Solver {
 public:
  Solver() { memo_.fill(kUnknown); }

  Outcome value(const Board& b) {
    const std::uint32_t code = encode(b);
    if (memo_[code] != kUnknown) return static_cast<Outcome>(memo_[code]);
    Outcome v;
    if (Mark w = winner(b); w != Mark::kEmpty) {
      v = w == Mark::kX ? Outcome::kXWin : Outcome::kOWin;
    } else if (full(b)) {
      v = Outcome::kDraw;
    } else {
      const Mark me = to_move(b);
      int best = me == Mark::kX ? -2 : 2;
      Board next = b;
      for (std::size_t i = 0; i < 9; ++i) {
        if (b[i] != Mark::kEmpty) continue;
        next[i] = me;
        const int child = static_cast<int>(value(next));
        next[i] = Mark::kEmpty;
        best = me == Mark::kX ? std::max(best, child) : std::min(best, child);
      }
      v = static_cast<Outcome>(best);
    }
    memo_[code] = static_cast<std::int8_t>(v);
    return v;
  }

  // Lowest-index move achieving the optimal value for the side to move.
  std::optional<std::size_t> best_move(const Board& b) {
    if (terminal(b)) return std::nullopt;
    const Mark me = to_move(b);
    const Outcome target = value(b);
    Board next = b;
    for (std::size_t i = 0; i < 9; ++i) {
      if (b[i] != Mark::kEmpty) continue;
      next[i] = me;
      const bool optimal = value(next) == target;
      next[i] = Mark::kEmpty;
      if (optimal) return i;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::int8_t kUnknown = 2;
  std::array<std::int8_t, kEncodings> memo_{};
};

struct Census {
  std::uint64_t naive_fill_count = 0;  // orderings of filling all nine cells, 9!
  std::uint64_t encoding_bound = 0;    // 3^9 cell-value vectors
  std::uint64_t reachable_states = 0;  // legal positions, play stops at a win
  std::uint64_t terminal_states = 0;
  std::uint64_t x_wins = 0;
  std::uint64_t o_wins = 0;
  std::uint64_t draws = 0;
  Outcome game_value = Outcome::kDraw;
};

inline Census enumerate_tictactoe() {
  Census c;
  c.naive_fill_count = 1;
  for (std::uint64_t k = 2; k <= 9; ++k) c.naive_fill_count *= k;
  c.encoding_bound = 1;
  for (int k = 0; k < 9; ++k) c.encoding_bound *= 3;

  std::vector<bool> seen(kEncodings, false);
  std::vector<Board> stack{Board{}};
  seen[encode(Board{})] = true;
  while (!stack.empty()) {
    Board b = stack.back();
    stack.pop_back();
    ++c.reachable_states;
    if (terminal(b)) {
      ++c.terminal_states;
      Mark w = winner(b);
      (w == Mark::kX ? c.x_wins : w == Mark::kO ? c.o_wins : c.draws) += 1;
      continue;
    }
    const Mark me = to_move(b);
    for (std::size_t i = 0; i < 9; ++i) {
      if (b[i] != Mark::kEmpty) continue;
      Board next = b;
      next[i] = me;
      const std::uint32_t code = encode(next);
      if (!seen[code]) {
        seen[code] = true;
        stack.push_back(next);
      }
    }
  }
  Solver solver;
  c.game_value = solver.value(Board{});
  return c;
}

// Search space: X to move on every state; each X move is answered by O
// playing the lowest-index empty cell. Goal: X has three in a row. Rank is
// the number of X marks still missing on the best line O has not blocked.
class XWinPuzzle {
 public:
  using State = std::uint32_t;  // encoded board
  using Move = std::size_t;     // cell X plays

  State initial() const { return encode(Board{}); }
  bool is_goal(State s) const { return winner(decode(s)) == Mark::kX; }

  double rank(State s) const {
    const Board b = decode(s);
    int best = 3;
    for (const auto& l : kLines) {
      int xs = 0;
      bool blocked = false;
      for (int i : l) {
        xs += b[i] == Mark::kX;
        blocked = blocked || b[i] == Mark::kO;
      }
      if (!blocked) best = std::min(best, 3 - xs);
    }
    return best;
  }

  std::vector<std::pair<Move, State>> successors(State s) const {
    std::vector<std::pair<Move, State>> out;
    const Board b = decode(s);
    if (terminal(b)) return out;
    for (std::size_t i = 0; i < 9; ++i) {
      if (b[i] != Mark::kEmpty) continue;
      Board next = b;
      next[i] = Mark::kX;
      if (!terminal(next)) {
        auto reply = std::find(next.begin(), next.end(), Mark::kEmpty);
        *reply = Mark::kO;
      }
      out.emplace_back(i, encode(next));
    }
    return out;
  }
};

}  // namespace gamekit::ttt

#endif  // GAMEKIT_TICTACTOE_HPP_
