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

#ifndef READABILITY_GRAPH_HPP
#define READABILITY_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace readability {

using Vertex = std::uint32_t;
using Symbol = std::uint32_t;
using String = std::vector<Symbol>;

// Thrown for malformed input or violated graph invariants.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive routine is asked to exceed its size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

// An edge of a bipartite graph; `s` indexes the S part, `t` the T part.
struct Edge {
  Vertex s = 0;
  Vertex t = 0;
  auto operator<=>(const Edge&) const = default;
};

// Loopless digraph on vertices 0..n-1. Immutable once built; arcs are kept
// sorted and deduplicated.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  // Throws GraphError on loops or out-of-range endpoints. Duplicate arcs are
  // dropped and counted.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t duplicates_dropped() const { return duplicates_; }

  bool has_arc(Vertex tail, Vertex head) const;
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t duplicates_ = 0;
};

// Bipartite graph with separate index spaces for the parts S and T.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t s_count, std::size_t t_count);
  // Throws GraphError on out-of-range endpoints. Duplicates are dropped and
  // counted.
  BipartiteGraph(std::size_t s_count, std::size_t t_count,
                 std::vector<Edge> edges);

  std::size_t s_count() const { return s_count_; }
  std::size_t t_count() const { return t_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted lexicographically by (s, t). Edge-indexed data elsewhere in the
  // library (decompositions, ILP variables) follows this order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t duplicates_dropped() const { return duplicates_; }

  bool has_edge(Vertex s, Vertex t) const;
  // Position of (s, t) in edges(), or -1.
  std::ptrdiff_t edge_index(Vertex s, Vertex t) const;
  const std::vector<Vertex>& s_neighbors(Vertex s) const { return s_adj_[s]; }
  const std::vector<Vertex>& t_neighbors(Vertex t) const { return t_adj_[t]; }
  std::size_t max_degree() const;

  bool operator==(const BipartiteGraph& other) const {
    return s_count_ == other.s_count_ && t_count_ == other.t_count_ &&
           edges_ == other.edges_;
  }

 private:
  std::size_t s_count_ = 0;
  std::size_t t_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> index_;  // s * t_count + t -> edge index or -1
  std::vector<std::vector<Vertex>> s_adj_;
  std::vector<std::vector<Vertex>> t_adj_;
  std::size_t duplicates_ = 0;
};

struct DigraphLabeling {
  std::vector<String> strings;
  std::size_t length() const;
};

struct BipartiteLabeling {
  std::vector<String> s;
  std::vector<String> t;
  std::size_t length() const;
};

// Edge colouring w : E -> {1..k}, indexed like BipartiteGraph::edges().
struct Decomposition {
  int k = 0;
  std::vector<int> colors;
};

struct DegreePair {
  std::size_t out = 0;
  std::size_t in = 0;
  auto operator<=>(const DegreePair&) const = default;
};

DegreePair max_degrees(const Digraph& g);

// Contracts twin classes (same part, same open neighbourhood). Class ids are
// assigned in order of each class's smallest member.
struct TwinReduction {
  BipartiteGraph reduced;
  std::vector<Vertex> s_class;
  std::vector<Vertex> t_class;
};

TwinReduction twin_free_reduction(const BipartiteGraph& g);
bool is_twin_free(const BipartiteGraph& g);

// Adjacency-matrix identification between balanced bipartite graphs and
// digraphs: arc u->v <-> edge (u in S, v in T). Edges (i, i) would become
// loops and are rejected.
Digraph bipartite_to_digraph(const BipartiteGraph& h);
BipartiteGraph digraph_to_bipartite(const Digraph& d);

// Keep sets need not be sorted; retained vertices are renumbered in
// increasing order of their original index.
BipartiteGraph induced_subgraph(const BipartiteGraph& g,
                                const std::vector<Vertex>& keep_s,
                                const std::vector<Vertex>& keep_t);

// Bipartite graph obtained by swapping the roles of S and T.
BipartiteGraph swap_parts(const BipartiteGraph& g);

}  // namespace readability

#endif  // READABILITY_GRAPH_HPP
