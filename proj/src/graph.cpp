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

#include "readability/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace readability {

namespace {

template <typename T>
std::size_t sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  const auto last = std::unique(v.begin(), v.end());
  const auto dropped = static_cast<std::size_t>(v.end() - last);
  v.erase(last, v.end());
  return dropped;
}

}  // namespace

Digraph::Digraph(std::size_t n) : Digraph(n, {}) {}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), matrix_(n * n, 0), out_(n), in_(n) {
  for (const Arc& a : arcs_) {
    if (a.tail >= n_ || a.head >= n_) {
      throw GraphError("arc " + std::to_string(a.tail) + "->" +
                       std::to_string(a.head) + " out of range for n=" +
                       std::to_string(n_));
    }
    if (a.tail == a.head) {
      throw GraphError("loop at vertex " + std::to_string(a.tail));
    }
  }
  duplicates_ = sort_unique(arcs_);
  for (const Arc& a : arcs_) {
    matrix_[a.tail * n_ + a.head] = 1;
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= n_ || head >= n_) return false;
  return matrix_[tail * n_ + head] != 0;
}

BipartiteGraph::BipartiteGraph(std::size_t s_count, std::size_t t_count)
    : BipartiteGraph(s_count, t_count, {}) {}

BipartiteGraph::BipartiteGraph(std::size_t s_count, std::size_t t_count,
                               std::vector<Edge> edges)
    : s_count_(s_count),
      t_count_(t_count),
      edges_(std::move(edges)),
      index_(s_count * t_count, -1),
      s_adj_(s_count),
      t_adj_(t_count) {
  for (const Edge& e : edges_) {
    if (e.s >= s_count_ || e.t >= t_count_) {
      throw GraphError("edge (" + std::to_string(e.s) + "," +
                       std::to_string(e.t) + ") out of range for " +
                       std::to_string(s_count_) + "+" +
                       std::to_string(t_count_));
    }
  }
  duplicates_ = sort_unique(edges_);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    index_[e.s * t_count_ + e.t] = static_cast<std::int32_t>(k);
    s_adj_[e.s].push_back(e.t);
    t_adj_[e.t].push_back(e.s);
  }
  for (auto& v : t_adj_) std::sort(v.begin(), v.end());
}

bool BipartiteGraph::has_edge(Vertex s, Vertex t) const {
  return edge_index(s, t) >= 0;
}

std::ptrdiff_t BipartiteGraph::edge_index(Vertex s, Vertex t) const {
  if (s >= s_count_ || t >= t_count_) return -1;
  return index_[s * t_count_ + t];
}

std::size_t BipartiteGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : s_adj_) best = std::max(best, a.size());
  for (const auto& a : t_adj_) best = std::max(best, a.size());
  return best;
}

std::size_t DigraphLabeling::length() const {
  std::size_t best = 0;
  for (const String& s : strings) best = std::max(best, s.size());
  return best;
}

std::size_t BipartiteLabeling::length() const {
  std::size_t best = 0;
  for (const String& x : s) best = std::max(best, x.size());
  for (const String& x : t) best = std::max(best, x.size());
  return best;
}

DegreePair max_degrees(const Digraph& g) {
  DegreePair d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    d.out = std::max(d.out, g.out_neighbors(v).size());
    d.in = std::max(d.in, g.in_neighbors(v).size());
  }
  return d;
}

namespace {

// Groups vertices by neighbourhood; ids follow first occurrence.
std::vector<Vertex> classify(const std::vector<std::vector<Vertex>>& adj) {
  std::map<std::vector<Vertex>, Vertex> ids;
  std::vector<Vertex> cls(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    auto [it, inserted] =
        ids.try_emplace(adj[v], static_cast<Vertex>(ids.size()));
    cls[v] = it->second;
  }
  return cls;
}

std::size_t class_count(const std::vector<Vertex>& cls) {
  Vertex top = 0;
  for (Vertex c : cls) top = std::max(top, c + 1);
  return top;
}

}  // namespace

TwinReduction twin_free_reduction(const BipartiteGraph& g) {
  std::vector<std::vector<Vertex>> s_adj(g.s_count());
  std::vector<std::vector<Vertex>> t_adj(g.t_count());
  for (Vertex s = 0; s < g.s_count(); ++s) s_adj[s] = g.s_neighbors(s);
  for (Vertex t = 0; t < g.t_count(); ++t) t_adj[t] = g.t_neighbors(t);

  TwinReduction out;
  out.s_class = classify(s_adj);
  out.t_class = classify(t_adj);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back({out.s_class[e.s], out.t_class[e.t]});
  }
  out.reduced = BipartiteGraph(class_count(out.s_class),
                               class_count(out.t_class), std::move(edges));
  return out;
}

bool is_twin_free(const BipartiteGraph& g) {
  const TwinReduction r = twin_free_reduction(g);
  return r.reduced.s_count() == g.s_count() &&
         r.reduced.t_count() == g.t_count();
}

Digraph bipartite_to_digraph(const BipartiteGraph& h) {
  if (h.s_count() != h.t_count()) {
    throw GraphError("bijection requires a balanced bipartite graph, got " +
                     std::to_string(h.s_count()) + "+" +
                     std::to_string(h.t_count()));
  }
  std::vector<Arc> arcs;
  arcs.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    if (e.s == e.t) {
      throw GraphError("edge (" + std::to_string(e.s) + "," +
                       std::to_string(e.t) + ") maps to a loop");
    }
    arcs.push_back({e.s, e.t});
  }
  return Digraph(h.s_count(), std::move(arcs));
}

BipartiteGraph digraph_to_bipartite(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
  return BipartiteGraph(d.vertex_count(), d.vertex_count(), std::move(edges));
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g,
                                const std::vector<Vertex>& keep_s,
                                const std::vector<Vertex>& keep_t) {
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> s_map(g.s_count(), kDropped);
  std::vector<Vertex> t_map(g.t_count(), kDropped);
  for (Vertex s : keep_s) {
    if (s >= g.s_count()) {
      throw GraphError("S index " + std::to_string(s) + " out of range");
    }
    s_map[s] = 0;
  }
  for (Vertex t : keep_t) {
    if (t >= g.t_count()) {
      throw GraphError("T index " + std::to_string(t) + " out of range");
    }
    t_map[t] = 0;
  }
  Vertex next = 0;
  for (Vertex& m : s_map) {
    if (m != kDropped) m = next++;
  }
  const std::size_t s_kept = next;
  next = 0;
  for (Vertex& m : t_map) {
    if (m != kDropped) m = next++;
  }
  const std::size_t t_kept = next;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (s_map[e.s] != kDropped && t_map[e.t] != kDropped) {
      edges.push_back({s_map[e.s], t_map[e.t]});
    }
  }
  return BipartiteGraph(s_kept, t_kept, std::move(edges));
}

BipartiteGraph swap_parts(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.t, e.s});
  return BipartiteGraph(g.t_count(), g.s_count(), std::move(edges));
}

}  // namespace readability
