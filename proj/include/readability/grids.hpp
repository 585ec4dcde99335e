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

#ifndef READABILITY_GRIDS_HPP
#define READABILITY_GRIDS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "readability/graph.hpp"

namespace readability {

struct GridCoord {
  int i = 0;
  int j = 0;
  auto operator<=>(const GridCoord&) const = default;
};

// A grid or toroidal grid with the parity bipartition: (i, j) is in S when
// i + j is even. Each part is numbered in row-major order.
struct GridGraph {
  int rows = 0;
  int cols = 0;
  bool torus = false;
  BipartiteGraph graph;
  std::vector<GridCoord> s_coords;
  std::vector<GridCoord> t_coords;
  std::vector<Vertex> part_index;  // row-major coordinate -> part index

  static bool in_s(GridCoord c) { return (c.i + c.j) % 2 == 0; }
  // Index of c within its part.
  Vertex index_of(GridCoord c) const;
};

// P_m x P_n. Requires m, n >= 1.
GridGraph grid_graph(int m, int n);

// C_m x C_n as a plain undirected graph on vertex ids i * n + j.
struct ToroidalGrid {
  int rows = 0;
  int cols = 0;
  bool bipartite = false;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Requires m, n >= 3.
ToroidalGrid toroidal_grid(int m, int n);

// Bipartite form of C_m x C_n. Throws GraphError unless m and n are even.
GridGraph toroidal_bipartite(int m, int n);

// TG_n = C_{4n} x C_{4n}.
GridGraph tg(int n);

// The domino plus one T vertex attached to its degree-3 S vertex. S and T
// indices follow grid_graph(2, 3), with the extra T vertex last.
BipartiteGraph graph_f();

// Edge classes 1..3 of TG_n. Class 1 is a 2-factor of disjoint 4-cycles,
// classes 2 and 3 are perfect matchings.
struct TgDecomposition {
  std::vector<std::size_t> g1;  // indices into graph.edges()
  std::vector<std::size_t> g2;
  std::vector<std::size_t> g3;
  Decomposition colors;
};

// Class of the TG_n edge between a and b (coordinates taken mod 4n).
int tg_edge_class(int n, GridCoord a, GridCoord b);

TgDecomposition tg_decompose(int n);

// Labeling state after each step of the construction. Unfilled positions
// hold kNoSymbol.
inline constexpr Symbol kNoSymbol = ~Symbol{0};

struct TgLabelTrace {
  BipartiteLabeling after_cycles;
  BipartiteLabeling after_matching;
  // Symbol of the 4-cycle whose top-left corner is the given coordinate.
  std::vector<std::pair<GridCoord, Symbol>> cycle_symbols;
};

// Length-3 overlap labeling of TG_n; symbols are the 4n^2 cycle ids.
BipartiteLabeling tg_label(int n, TgLabelTrace* trace = nullptr);

// Length-3 labeling of grid_graph(m, n) obtained by restricting the
// labeling of TG_k, k = max(m, n) + 1. Requires m, n >= 3.
BipartiteLabeling grid_label(int m, int n);

}  // namespace readability

#endif  // READABILITY_GRIDS_HPP
