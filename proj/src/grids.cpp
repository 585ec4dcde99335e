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

#include "readability/grids.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace readability {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

GridGraph layout(int m, int n, bool torus) {
  GridGraph g;
  g.rows = m;
  g.cols = n;
  g.torus = torus;
  g.part_index.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const GridCoord c{i, j};
      auto& part = GridGraph::in_s(c) ? g.s_coords : g.t_coords;
      g.part_index[static_cast<std::size_t>(i) * n + j] =
          static_cast<Vertex>(part.size());
      part.push_back(c);
    }
  }
  return g;
}

Edge edge_between(const GridGraph& g, GridCoord a, GridCoord b) {
  if (!GridGraph::in_s(a)) std::swap(a, b);
  return {g.index_of(a), g.index_of(b)};
}

}  // namespace

Vertex GridGraph::index_of(GridCoord c) const {
  return part_index[static_cast<std::size_t>(c.i) * cols + c.j];
}

GridGraph grid_graph(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1");
  }
  GridGraph g = layout(m, n, false);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i + 1 < m) edges.push_back(edge_between(g, {i, j}, {i + 1, j}));
      if (j + 1 < n) edges.push_back(edge_between(g, {i, j}, {i, j + 1}));
    }
  }
  g.graph = BipartiteGraph(g.s_coords.size(), g.t_coords.size(),
                           std::move(edges));
  return g;
}

ToroidalGrid toroidal_grid(int m, int n) {
  if (m < 3 || n < 3) {
    throw std::invalid_argument("toroidal grid dimensions must be at least 3");
  }
  ToroidalGrid g;
  g.rows = m;
  g.cols = n;
  g.bipartite = m % 2 == 0 && n % 2 == 0;
  auto id = [n](int i, int j) { return static_cast<Vertex>(i * n + j); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      g.edges.emplace_back(id(i, j), id((i + 1) % m, j));
      g.edges.emplace_back(id(i, j), id(i, (j + 1) % n));
    }
  }
  return g;
}

GridGraph toroidal_bipartite(int m, int n) {
  if (m < 3 || n < 3) {
    throw std::invalid_argument("toroidal grid dimensions must be at least 3");
  }
  if (m % 2 != 0 || n % 2 != 0) {
    throw GraphError("C_" + std::to_string(m) + " x C_" + std::to_string(n) +
                     " is not bipartite");
  }
  GridGraph g = layout(m, n, true);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.push_back(edge_between(g, {i, j}, {(i + 1) % m, j}));
      edges.push_back(edge_between(g, {i, j}, {i, (j + 1) % n}));
    }
  }
  g.graph = BipartiteGraph(g.s_coords.size(), g.t_coords.size(),
                           std::move(edges));
  return g;
}

GridGraph tg(int n) {
  if (n < 1) throw std::invalid_argument("TG_n requires n >= 1");
  return toroidal_bipartite(4 * n, 4 * n);
}

BipartiteGraph graph_f() {
  const GridGraph domino = grid_graph(2, 3);
  std::vector<Edge> edges = domino.graph.edges();
  const Vertex hub = domino.index_of({1, 1});
  const auto pendant = static_cast<Vertex>(domino.t_coords.size());
  edges.push_back({hub, pendant});
  return BipartiteGraph(domino.s_coords.size(), domino.t_coords.size() + 1,
                        std::move(edges));
}

int tg_edge_class(int n, GridCoord a, GridCoord b) {
  const int size = 4 * n;
  a = {mod(a.i, size), mod(a.j, size)};
  b = {mod(b.i, size), mod(b.j, size)};
  if (a.j == b.j && mod(b.i - a.i, size) == size - 1) std::swap(a, b);
  if (a.i == b.i && mod(b.j - a.j, size) == size - 1) std::swap(a, b);
  if (a.j == b.j && mod(b.i - a.i, size) == 1) {
    return a.i % 2 == 0 ? 1 : 2;
  }
  if (a.i == b.i && mod(b.j - a.j, size) == 1) {
    const bool top_half = a.i % 4 < 2;
    return top_half == (a.j % 2 == 0) ? 1 : 3;
  }
  throw std::invalid_argument("coordinates are not adjacent in TG_n");
}

TgDecomposition tg_decompose(int n) {
  const GridGraph g = tg(n);
  TgDecomposition d;
  d.colors.k = 3;
  d.colors.colors.resize(g.graph.edge_count());
  for (std::size_t k = 0; k < g.graph.edge_count(); ++k) {
    const Edge& e = g.graph.edges()[k];
    const int c = tg_edge_class(n, g.s_coords[e.s], g.t_coords[e.t]);
    d.colors.colors[k] = c;
    (c == 1 ? d.g1 : c == 2 ? d.g2 : d.g3).push_back(k);
  }
  return d;
}

BipartiteLabeling tg_label(int n, TgLabelTrace* trace) {
  const GridGraph g = tg(n);
  const int size = 4 * n;
  BipartiteLabeling l;
  l.s.assign(g.s_coords.size(), String(3, kNoSymbol));
  l.t.assign(g.t_coords.size(), String(3, kNoSymbol));

  // Step 1: one symbol per class-1 cycle, at the end of S strings and the
  // start of T strings.
  std::map<GridCoord, Symbol> cycle_of_base;
  for (int i = 0; i < size; i += 2) {
    for (int j = 0; j < size; ++j) {
      if (tg_edge_class(n, {i, j}, {i, j + 1}) == 1) {
        cycle_of_base.emplace(GridCoord{i, j},
                              static_cast<Symbol>(cycle_of_base.size()));
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const GridCoord c{i, j};
      const int bi = i - i % 2;
      const int bj = tg_edge_class(n, c, {i, j + 1}) == 1 ? j : mod(j - 1, size);
      const Symbol sym = cycle_of_base.at({bi, bj});
      if (GridGraph::in_s(c)) {
        l.s[g.index_of(c)][2] = sym;
      } else {
        l.t[g.index_of(c)][0] = sym;
      }
    }
  }
  if (trace != nullptr) {
    trace->after_cycles = l;
    trace->cycle_symbols.assign(cycle_of_base.begin(), cycle_of_base.end());
  }

  const TgDecomposition d = tg_decompose(n);
  // Step 2: class-2 edges overlap in two symbols.
  for (std::size_t k : d.g2) {
    const Edge& e = g.graph.edges()[k];
    l.s[e.s][1] = l.t[e.t][0];
    l.t[e.t][1] = l.s[e.s][2];
  }
  if (trace != nullptr) trace->after_matching = l;

  // Step 3: class-3 edges overlap in all three symbols.
  for (std::size_t k : d.g3) {
    const Edge& e = g.graph.edges()[k];
    if (l.s[e.s][1] != l.t[e.t][1]) {
      throw std::logic_error("class-3 edge endpoints disagree in the middle");
    }
    l.s[e.s][0] = l.t[e.t][0];
    l.t[e.t][2] = l.s[e.s][2];
  }
  return l;
}

BipartiteLabeling grid_label(int m, int n) {
  if (m < 3 || n < 3) {
    throw std::invalid_argument("grid_label requires m, n >= 3");
  }
  const int k = std::max(m, n) + 1;
  const GridGraph torus = tg(k);
  const BipartiteLabeling full = tg_label(k);
  const GridGraph grid = grid_graph(m, n);
  BipartiteLabeling l;
  for (const GridCoord& c : grid.s_coords) {
    l.s.push_back(full.s[torus.index_of(c)]);
  }
  for (const GridCoord& c : grid.t_coords) {
    l.t.push_back(full.t[torus.index_of(c)]);
  }
  return l;
}

}  // namespace readability
