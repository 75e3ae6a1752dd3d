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

#ifndef GAMEKIT_VOTING_IO_HPP_
#define GAMEKIT_VOTING_IO_HPP_

// Voting file:
//   voting:
//   quota: <decimal>
//   weights: <w1> ... <wn>
//   competencies: <p1> ... <pn>     (optional)

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamekit/text.hpp"
#include "gamekit/voting.hpp"

namespace gamekit {

struct VotingFile {
  WeightedVotingGame game;
  std::optional<std::vector<double>> competencies;
  // Competencies exactly as written, for exact rational evaluation.
  std::vector<std::string> competency_text;
};

inline VotingFile parse_voting(std::string_view content) {
  auto lines = text::significant_lines(content);
  if (lines.empty()) throw ParseError("empty voting file");
  auto head = text::key_value(lines[0].content);
  if (!head || head->first != "voting" || !head->second.empty())
    throw ParseError(lines[0].number, "expected 'voting:' header");

  std::optional<double> quota;
  std::optional<std::vector<double>> weights, comps;
  std::vector<std::string> comp_text;
  std::size_t weights_line = 0, comps_line = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto kv = text::key_value(line.content);
    if (!kv) throw ParseError(line.number, "expected 'key: value'");
    auto [key, rest] = *kv;
    auto numbers = [&](std::optional<std::vector<double>>& target) {
      if (target) throw ParseError(line.number, "duplicate '" + std::string(key) + "' line");
      std::vector<double> v;
      for (auto t : text::split_ws(rest)) v.push_back(text::parse_double(t, line.number));
      if (v.empty()) throw ParseError(line.number, "'" + std::string(key) + "' needs values");
      target = std::move(v);
    };
    if (key == "quota") {
      if (quota) throw ParseError(line.number, "duplicate 'quota' line");
      quota = text::parse_double(rest, line.number);
    } else if (key == "weights") {
      numbers(weights);
      weights_line = line.number;
    } else if (key == "competencies") {
      numbers(comps);
      comps_line = line.number;
      for (auto t : text::split_ws(rest)) comp_text.emplace_back(t);
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!quota) throw ParseError("missing 'quota:' line");
  if (!weights) throw ParseError("missing 'weights:' line");
  if (comps && comps->size() != weights->size())
    throw ParseError(comps_line, "expected " + std::to_string(weights->size()) +
                                     " competencies, got " + std::to_string(comps->size()));
  try {
    return {WeightedVotingGame(std::move(*weights), *quota), std::move(comps),
            std::move(comp_text)};
  } catch (const DomainError& e) {
    throw ParseError(weights_line, e.what());
  }
}

}  // namespace gamekit

#endif  // GAMEKIT_VOTING_IO_HPP_
