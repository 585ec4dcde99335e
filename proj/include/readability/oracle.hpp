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

// Exact readability by exhaustive search over symbol assignments in
// restricted-growth form (each new symbol is the next unused integer), so
// labelings equal up to renaming are visited once.

#ifndef READABILITY_ORACLE_HPP
#define READABILITY_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "readability/graph.hpp"

namespace readability {

inline constexpr std::size_t kBipartitePositionGuard = 28;
inline constexpr std::size_t kDigraphPositionGuard = 16;

struct OracleOptions {
  int threads = 1;
  // Maximum number of symbol positions (vertices times length) searched.
  std::size_t position_guard = 0;  // 0 selects the per-mode default
};

template <typename Labeling>
struct OracleResult {
  // Unset when no labeling of length <= r_max exists or the guard tripped.
  std::optional<int> readability;
  Labeling witness;
  // Every length below this was refuted exhaustively.
  int refuted_below = 0;
  bool guard_tripped = false;
  std::uint64_t nodes = 0;
};

// Finds a labeling with every string of length exactly r, if one exists.
std::optional<BipartiteLabeling> find_bipartite_labeling(
    const BipartiteGraph& g, int r, const OracleOptions& opts = {},
    std::uint64_t* nodes = nullptr);

// Finds an injective labeling with string lengths in 1..r, if one exists.
std::optional<DigraphLabeling> find_digraph_labeling(
    const Digraph& g, int r, std::uint64_t* nodes = nullptr);

// Searches r = 0, 1, ... r_max. Edgeless graphs have readability 0 with
// all strings empty.
OracleResult<BipartiteLabeling> exact_readability_bipartite(
    const BipartiteGraph& g, int r_max, const OracleOptions& opts = {});

// Searches r = 1, ... r_max.
OracleResult<DigraphLabeling> exact_readability_digraph(
    const Digraph& g, int r_max, const OracleOptions& opts = {});

}  // namespace readability

#endif  // READABILITY_ORACLE_HPP
