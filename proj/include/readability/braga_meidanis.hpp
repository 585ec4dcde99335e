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

#ifndef READABILITY_BRAGA_MEIDANIS_HPP
#define READABILITY_BRAGA_MEIDANIS_HPP

#include <cstddef>
#include <vector>

#include "readability/graph.hpp"

namespace readability {

// Proper edge colouring with exactly max_degree() colours, built by
// alternating-path recolouring. Colours are 1-based.
Decomposition bipartite_edge_coloring(const BipartiteGraph& g);

// Partition of the arcs into directed matchings (distinct tails and distinct
// heads within each matching). Each matching is sorted by (tail, head).
struct DirectedMatchingCover {
  std::vector<std::vector<Arc>> matchings;
};

// Uses exactly max(out-degree, in-degree) matchings.
DirectedMatchingCover directed_edge_coloring(const Digraph& g);

// Longest prefix/suffix buffer after each matching has been processed.
struct BmTrace {
  std::vector<std::size_t> max_buffer_after;
  std::size_t symbols_used = 0;
};

// Injective overlap labeling of g with length at most 2^(p+1) - 1.
DigraphLabeling bm_label(const Digraph& g, BmTrace* trace = nullptr);

}  // namespace readability

#endif  // READABILITY_BRAGA_MEIDANIS_HPP
