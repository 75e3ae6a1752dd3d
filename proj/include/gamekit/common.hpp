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

#ifndef GAMEKIT_COMMON_HPP_
#define GAMEKIT_COMMON_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamekit {

// Absolute tolerance used for every payoff / probability comparison.
inline constexpr double kTolerance = 1e-9;

inline bool approx_equal(double a, double b, double tol = kTolerance) {
  return std::fabs(a - b) <= tol;
}
inline bool definitely_less(double a, double b, double tol = kTolerance) {
  return a < b - tol;
}
inline bool less_or_equal(double a, double b, double tol = kTolerance) {
  return a <= b + tol;
}

// Malformed input text (game, voting or tree files, command-line values).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}

  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input is well-formed but the requested computation is undefined for it
// (degenerate denominators, violated preconditions, broken invariants).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds a size or shape limit of an exact algorithm.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Player { kRow, kCol };

inline const char* to_string(Player p) { return p == Player::kRow ? "row" : "col"; }

}  // namespace gamekit

#endif  // GAMEKIT_COMMON_HPP_
