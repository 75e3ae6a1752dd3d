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

#ifndef GAMEKIT_GAME_IO_HPP_
#define GAMEKIT_GAME_IO_HPP_

// Reader and writer for the line-based normal-form game file:
//
//   game: normalform
//   zerosum: true|false
//   shape: R C
//   row_payoffs:
//   <R lines of C decimals>
//   col_payoffs:            (only when zerosum is false)
//   <R lines of C decimals>
//   row_labels: <R names>   (optional)
//   col_labels: <C names>   (optional)
//
// '#' lines and blank lines are ignored anywhere.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gamekit/bimatrix.hpp"
#include "gamekit/text.hpp"

namespace gamekit {

namespace detail {

inline std::string_view expect_key(const text::Line& line, std::string_view key) {
  auto kv = text::key_value(line.content);
  if (!kv || kv->first != key)
    throw ParseError(line.number, "expected '" + std::string(key) + ":'");
  return kv->second;
}

}  // namespace detail

inline BimatrixGame parse_game(std::string_view content) {
  auto lines = text::significant_lines(content);
  std::size_t pos = 0;
  auto next = [&](std::string_view what) -> const text::Line& {
    if (pos >= lines.size()) throw ParseError("unexpected end of file, missing " + std::string(what));
    return lines[pos++];
  };

  const auto& l1 = next("'game:' header");
  if (detail::expect_key(l1, "game") != "normalform")
    throw ParseError(l1.number, "only 'game: normalform' is supported");

  const auto& l2 = next("'zerosum:' line");
  auto zs = detail::expect_key(l2, "zerosum");
  if (zs != "true" && zs != "false")
    throw ParseError(l2.number, "zerosum must be 'true' or 'false'");
  const bool zerosum = zs == "true";

  const auto& l3 = next("'shape:' line");
  auto dims = text::split_ws(detail::expect_key(l3, "shape"));
  if (dims.size() != 2) throw ParseError(l3.number, "shape needs two integers 'R C'");
  long long r = text::parse_integer(dims[0], l3.number);
  long long c = text::parse_integer(dims[1], l3.number);
  if (r < 1 || c < 1) throw ParseError(l3.number, "shape dimensions must be >= 1");
  const auto rows = static_cast<std::size_t>(r);
  const auto cols = static_cast<std::size_t>(c);

  std::optional<Matrix> row_payoffs, col_payoffs;
  std::vector<std::string> row_labels, col_labels;
  bool seen_row_labels = false, seen_col_labels = false;

  auto read_matrix = [&](std::size_t header_line) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (pos >= lines.size())
        throw ParseError(header_line, "expected " + std::to_string(rows) +
                                          " payoff rows, found " + std::to_string(i));
      const auto& line = lines[pos];
      if (text::key_value(line.content))
        throw ParseError(line.number, "expected " + std::to_string(rows) +
                                          " payoff rows, found " + std::to_string(i));
      ++pos;
      auto tokens = text::split_ws(line.content);
      if (tokens.size() != cols)
        throw ParseError(line.number, "expected " + std::to_string(cols) + " values, got " +
                                          std::to_string(tokens.size()));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = text::parse_double(tokens[j], line.number);
    }
    return m;
  };

  auto read_labels = [&](const text::Line& line, std::string_view rest, std::size_t expected,
                         bool& seen) {
    if (seen) throw ParseError(line.number, "duplicate label line");
    seen = true;
    std::vector<std::string> out;
    for (auto t : text::split_ws(rest)) out.emplace_back(t);
    if (out.size() != expected)
      throw ParseError(line.number, "expected " + std::to_string(expected) + " labels, got " +
                                        std::to_string(out.size()));
    return out;
  };

  while (pos < lines.size()) {
    const auto& line = lines[pos++];
    auto kv = text::key_value(line.content);
    if (!kv) throw ParseError(line.number, "expected a section header");
    auto [key, rest] = *kv;
    if (key == "row_payoffs" || key == "col_payoffs") {
      if (!rest.empty()) throw ParseError(line.number, "payoff rows start on the next line");
      auto& target = key == "row_payoffs" ? row_payoffs : col_payoffs;
      if (target) throw ParseError(line.number, "duplicate " + std::string(key) + " section");
      if (zerosum && key == "col_payoffs")
        throw ParseError(line.number, "col_payoffs not allowed when zerosum is true");
      target = read_matrix(line.number);
    } else if (key == "row_labels") {
      row_labels = read_labels(line, rest, rows, seen_row_labels);
    } else if (key == "col_labels") {
      col_labels = read_labels(line, rest, cols, seen_col_labels);
    } else {
      throw ParseError(line.number, "unknown section '" + std::string(key) + "'");
    }
  }

  if (!row_payoffs) throw ParseError("missing row_payoffs section");
  if (!zerosum && !col_payoffs) throw ParseError("missing col_payoffs section");
  if (zerosum)
    return BimatrixGame::zero_sum(std::move(*row_payoffs), std::move(row_labels),
                                  std::move(col_labels));
  return BimatrixGame(std::move(*row_payoffs), std::move(*col_payoffs), std::move(row_labels),
                      std::move(col_labels));
}

// Writes `g` in the game file format. Numbers use their shortest exact
// decimal form, so parse_game(format_game(g)) == g. The file is marked
// zero-sum only when col_payoffs is exactly the negation of row_payoffs.
inline std::string format_game(const BimatrixGame& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  const bool zerosum = g.col_payoffs() == g.row_payoffs().negated();
  out << "game: normalform\n";
  out << "zerosum: " << (zerosum ? "true" : "false") << '\n';
  out << "shape: " << g.rows() << ' ' << g.cols() << '\n';
  auto labels = [&](const char* key, const std::vector<std::string>& l) {
    if (l.empty()) return;
    out << key << ':';
    for (const auto& s : l) out << ' ' << s;
    out << '\n';
  };
  labels("row_labels", g.row_labels());
  labels("col_labels", g.col_labels());
  auto matrix = [&](const char* key, const Matrix& m) {
    out << key << ":\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        out << (c ? " " : "") << text::exact_decimal(m(r, c));
      out << '\n';
    }
  };
  matrix("row_payoffs", g.row_payoffs());
  if (!zerosum) matrix("col_payoffs", g.col_payoffs());
  return out.str();
}

}  // namespace gamekit

#endif  // GAMEKIT_GAME_IO_HPP_
