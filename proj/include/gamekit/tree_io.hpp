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

#ifndef GAMEKIT_TREE_IO_HPP_
#define GAMEKIT_TREE_IO_HPP_

// Tree file, one statement per line:
//   node <id> player <p>
//   leaf <id> payoffs <v1> <v2> ...
//   edge <from> <to> <label>
//   infoset <id1> <id2> ...
//   root <id>

#include <string>
#include <string_view>

#include "gamekit/text.hpp"
#include "gamekit/tree.hpp"

namespace gamekit {

inline GameTree parse_tree(std::string_view content) {
  TreeBuilder builder;
  std::size_t last_line = 0;
  try {
    for (const auto& line : text::significant_lines(content)) {
      last_line = line.number;
      auto tok = text::split_ws(line.content);
      const auto& kw = tok[0];
      auto need = [&](bool ok, const char* usage) {
        if (!ok) throw ParseError(line.number, std::string("expected '") + usage + "'");
      };
      if (kw == "node") {
        need(tok.size() == 4 && tok[2] == "player", "node <id> player <p>");
        builder.decision(text::parse_integer(tok[1], line.number),
                         static_cast<int>(text::parse_integer(tok[3], line.number)));
      } else if (kw == "leaf") {
        need(tok.size() >= 4 && tok[2] == "payoffs", "leaf <id> payoffs <v1> ...");
        std::vector<double> pay;
        for (std::size_t i = 3; i < tok.size(); ++i)
          pay.push_back(text::parse_double(tok[i], line.number));
        builder.leaf(text::parse_integer(tok[1], line.number), std::move(pay));
      } else if (kw == "edge") {
        need(tok.size() == 4, "edge <from> <to> <label>");
        builder.edge(text::parse_integer(tok[1], line.number),
                     text::parse_integer(tok[2], line.number), std::string(tok[3]));
      } else if (kw == "infoset") {
        need(tok.size() >= 2, "infoset <id1> <id2> ...");
        std::vector<long long> ids;
        for (std::size_t i = 1; i < tok.size(); ++i)
          ids.push_back(text::parse_integer(tok[i], line.number));
        builder.info_set(std::move(ids));
      } else if (kw == "root") {
        need(tok.size() == 2, "root <id>");
        builder.root(text::parse_integer(tok[1], line.number));
      } else {
        throw ParseError(line.number, "unknown statement '" + std::string(kw) + "'");
      }
    }
  } catch (const DomainError& e) {
    // Duplicate ids are detected while building.
    throw ParseError(last_line, e.what());
  }
  try {
    return builder.build();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

}  // namespace gamekit

#endif  // GAMEKIT_TREE_IO_HPP_
