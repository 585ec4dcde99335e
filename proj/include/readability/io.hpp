// Copyright 2026 The Readability Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
// Graph file: first non-comment line is `digraph <n>` or
// `bipartite <nS> <nT>`, followed by one `<a> <b>` pair per line (0-based).
// Lines starting with `#` are comments.
//
// Labeling file: one `<S|T|V> <index> <sym,sym,...>` line per vertex. An
// omitted symbol list denotes the empty string.

#ifndef READABILITY_IO_HPP
#define READABILITY_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "readability/graph.hpp"

namespace readability {

using AnyGraph = std::variant<Digraph, BipartiteGraph>;

struct ParsedGraph {
  AnyGraph graph;
  std::size_t duplicates_dropped = 0;
};

ParsedGraph parse_graph(std::string_view text);

std::string serialize_graph(const Digraph& g);
std::string serialize_graph(const BipartiteGraph& g);

using AnyLabeling = std::variant<DigraphLabeling, BipartiteLabeling>;

// A file with only V lines parses as DigraphLabeling; S/T lines as
// BipartiteLabeling. Mixing both is an error, as is a gap in the indices.
AnyLabeling parse_labeling(std::string_view text);

std::string serialize_labeling(const DigraphLabeling& l);
std::string serialize_labeling(const BipartiteLabeling& l);

// Renders a string with letters a..z when every symbol is below 26,
// otherwise as comma-separated integers.
std::string render(const String& s);

}  // namespace readability

#endif  // READABILITY_IO_HPP
