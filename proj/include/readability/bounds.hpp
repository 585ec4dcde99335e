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

// Lower and upper bounds on bipartite readability.

#ifndef READABILITY_BOUNDS_HPP
#define READABILITY_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "readability/graph.hpp"

namespace readability {

struct Biclique {
  std::vector<Vertex> s;
  std::vector<Vertex> t;
};

struct Readability1Result {
  bool ok = false;
  // Non-trivial components, each complete when ok is true.
  std::vector<Biclique> components;
};

// True iff every component with an edge is complete bipartite.
Readability1Result readability1_check(const BipartiteGraph& g);

// Minimum over same-part pairs of the larger one-sided neighbourhood
// difference. Unset when either part has fewer than two vertices.
std::optional<std::size_t> distinctness(const BipartiteGraph& g);

// distinctness + 1 when the maximum degree is at least 2 and both parts have
// at least two vertices.
std::optional<int> distinctness_lower_bound(const BipartiteGraph& g);

// Parts indexed by the nonzero binary n-vectors in lexicographic order;
// s ~ t iff their inner product is odd. Throws GuardError for n >= 16.
BipartiteGraph inner_product_graph(int n);

struct MatchingVerdict {
  bool ok = true;
  int condition = 0;  // 1: G - M, 2: induced C6, 3: induced domino
  std::string detail;
};

// Checks the three feasible-matching conditions. Throws
// std::invalid_argument if m is not a matching of g.
MatchingVerdict feasible_matching_check(const BipartiteGraph& g,
                                        const std::vector<Edge>& m);

inline constexpr std::size_t kReadability2EdgeGuard = 16;

// Searches all matchings of the twin-free reduction; the witness is a
// feasible matching of that reduction. Throws GuardError when the reduction
// has more than kReadability2EdgeGuard edges.
bool readability2_bruteforce(const BipartiteGraph& g,
                             std::vector<Edge>* witness = nullptr);

// Colours each edge by the overlap length of its endpoint strings. Throws
// LabelingError if l is not a valid labeling of g.
Decomposition ell_decomposition(const BipartiteGraph& g,
                                const BipartiteLabeling& l);

enum class HubMode {
  kLiteral,  // twin condition over S x T pairs only
  kStrict,   // also same-part pairs
};

struct HubVerdict {
  bool ok = true;
  int clause = 0;  // 1: class not a union of bicliques, 2: twin condition
  int color = 0;
  std::string detail;
};

// Throws std::invalid_argument if w does not colour every edge with a value
// in 1..w.k.
HubVerdict hub_verify(const BipartiteGraph& g, const Decomposition& w,
                      HubMode mode = HubMode::kStrict);

inline constexpr std::size_t kHubEdgeGuard = 12;

// Smallest k <= k_max admitting a decomposition that satisfies the hub rule
// (strict mode); 0 for edgeless graphs. Throws GuardError above
// kHubEdgeGuard edges.
std::optional<int> hub_bruteforce(const BipartiteGraph& g, int k_max,
                                  Decomposition* witness = nullptr);

struct BoundsReport {
  std::optional<std::size_t> distinctness;
  std::optional<int> distinctness_lower;
  std::optional<int> hub;
  int hub_lower = 0;
  int hub_upper = 0;
  bool readability1 = false;
  std::optional<bool> readability2;
  int lower = 0;
  int upper = 0;
};

// Fills every field whose computation stays within its guard.
BoundsReport bounds_report(const BipartiteGraph& g);

std::string format_report(const BoundsReport& r);

}  // namespace readability

#endif  // READABILITY_BOUNDS_HPP
