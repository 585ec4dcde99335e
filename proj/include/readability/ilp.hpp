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

// Feasibility ILPs whose solutions are overlap labelings of length at most r.
//
// Bipartite model variables:
//   x_u_v_i_j  u(i) == v(j), for u in S, v in T, 1 <= i, j <= r
//   z_e_i      edge e overlaps in its last r - i + 1 positions of u
//
// Digraph model variables:
//   x_u_v_i_j  u(i) == v(j) and both positions are non-null, u != v
//   t_u_i      position i of u is null (the string is shorter than i)
//   z_e_i_l    arc e overlaps u(i..l) with the prefix of v, and u ends at l
//
// Row names are `<family>_<tag><index>_...`, for instance `edge_cover_e0`
// or `edge_link_e0_i1`. Rows are generated in a fixed order, so emitted LP
// text is byte-identical for equal inputs.

#ifndef READABILITY_ILP_HPP
#define READABILITY_ILP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "readability/graph.hpp"

namespace readability {

enum class VarKind : std::uint8_t { kX, kZ2, kZ3, kT };

// Index fields by kind: X uses (a=u, b=v, i, j); Z2 uses (a=e, i); Z3 uses
// (a=e, i, j=l); T uses (a=u, i). Unused fields are zero.
struct VarKey {
  VarKind kind = VarKind::kX;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint16_t i = 0;
  std::uint16_t j = 0;
  auto operator<=>(const VarKey&) const = default;

  static VarKey x(Vertex u, Vertex v, int i, int j);
  static VarKey z2(std::size_t e, int i);
  static VarKey z3(std::size_t e, int i, int l);
  static VarKey t(Vertex u, int i);
};

std::string var_name(const VarKey& k);

enum class Relation : std::uint8_t { kLe, kGe, kEq };

struct LinearTerm {
  std::int32_t coef = 0;
  std::uint32_t var = 0;  // index into the model's variable order
};

struct ModelOptions {
  // Bipartite: adds sum x - z_e_i <= r - i, tying z_e_i to the full run.
  bool tight_rows = true;
  // Adds transitivity rows through repeated vertices (and, for digraphs,
  // injectivity rows for strings shorter than r). Every satisfying
  // assignment of a closure model decodes to a valid labeling.
  bool closure = false;
};

enum class ModelKind : std::uint8_t { kBipartite, kDigraph };

// Closed-form variable indexing for one (graph, r) pair.
class VarLayout {
 public:
  static VarLayout bipartite(const BipartiteGraph& g, int r);
  static VarLayout digraph(const Digraph& g, int r);

  ModelKind kind() const { return kind_; }
  int r() const { return r_; }
  std::size_t size() const { return size_; }

  std::uint32_t x(Vertex u, Vertex v, int i, int j) const;
  std::uint32_t z2(std::size_t e, int i) const;
  std::uint32_t z3(std::size_t e, int i, int l) const;
  std::uint32_t t(Vertex u, int i) const;

  VarKey key(std::uint32_t index) const;
  // Unset when the key does not belong to this layout.
  std::optional<std::uint32_t> index(const VarKey& k) const;

 private:
  ModelKind kind_ = ModelKind::kBipartite;
  int r_ = 0;
  std::size_t n1_ = 0;  // S count, or vertex count
  std::size_t n2_ = 0;  // T count, or vertex count
  std::size_t m_ = 0;
  std::size_t x_count_ = 0;
  std::size_t z_count_ = 0;
  std::size_t size_ = 0;
};

// A row as produced by the generator. The name is rendered on demand.
struct RowView {
  const char* family = "";
  std::pair<char, std::int64_t> parts[8];
  int part_count = 0;
  std::vector<LinearTerm> terms;
  Relation rel = Relation::kLe;
  std::int64_t rhs = 0;

  std::string name() const;
};

using RowSink = std::function<void(const RowView&)>;

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation rel = Relation::kLe;
  std::int64_t rhs = 0;
};

struct IlpModel {
  ModelKind kind = ModelKind::kBipartite;
  int r = 0;
  ModelOptions options;
  BipartiteGraph bipartite;  // set for bipartite models
  Digraph digraph;           // set for digraph models
  VarLayout layout;
  std::vector<VarKey> variables;
  std::vector<Constraint> constraints;
};

struct ModelCounts {
  std::uint64_t variables = 0;
  std::uint64_t constraints = 0;
  auto operator<=>(const ModelCounts&) const = default;
};

// Both builders throw std::invalid_argument for r < 1.
IlpModel build_bipartite_model(const BipartiteGraph& g, int r,
                               const ModelOptions& opts = {});
IlpModel build_digraph_model(const Digraph& g, int r,
                             const ModelOptions& opts = {});

// Generate rows one at a time without storing them; the sink may be empty.
ModelCounts stream_bipartite_model(const BipartiteGraph& g, int r,
                                   const ModelOptions& opts,
                                   const RowSink& sink);
ModelCounts stream_digraph_model(const Digraph& g, int r,
                                 const ModelOptions& opts,
                                 const RowSink& sink);

// Closed forms. With default options and nS = nT = n the bipartite
// constraint count is m + r n^2 + r m + C(n,2)^2 r^4.
ModelCounts bipartite_model_counts(std::size_t s_count, std::size_t t_count,
                                   std::size_t m, int r,
                                   const ModelOptions& opts = {});
ModelCounts digraph_model_counts(std::size_t n, std::size_t m, int r,
                                 const ModelOptions& opts = {});

std::string emit_lp(const IlpModel& m);

// Writes the same text emit_lp would produce for the built model, without
// materializing it.
void write_lp(const BipartiteGraph& g, int r, const ModelOptions& opts,
              std::ostream& os);
void write_lp(const Digraph& g, int r, const ModelOptions& opts,
              std::ostream& os);

using Assignment = std::map<VarKey, int>;

struct CheckVerdict {
  bool ok = true;
  std::string row;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// Throws std::invalid_argument when a variable is missing or not 0/1.
CheckVerdict check_assignment(const IlpModel& m, const Assignment& a);
// Values in the model's variable order.
CheckVerdict check_assignment(const IlpModel& m,
                              const std::vector<std::uint8_t>& values);

// Thrown when a labeling cannot be encoded, or an assignment decoded.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bipartite strings must share one length L <= r; S strings are padded in
// front and T strings at the back with fresh symbols to reach length r.
Assignment encode_labeling(const BipartiteGraph& g, int r,
                           const BipartiteLabeling& l);
// Digraph strings must be distinct with lengths in 1..r.
Assignment encode_labeling(const Digraph& g, int r, const DigraphLabeling& l);

// Throws EncodingError if the assignment violates a row of m, or if its
// x-variables do not describe a consistent symbol equality (possible only
// when m was built without closure rows), or if a digraph decode is not
// injective.
BipartiteLabeling decode_bipartite(const IlpModel& m, const Assignment& a);
DigraphLabeling decode_digraph(const IlpModel& m, const Assignment& a);

std::vector<std::uint8_t> to_dense(const IlpModel& m, const Assignment& a);
Assignment from_dense(const IlpModel& m,
                      const std::vector<std::uint8_t>& values);

}  // namespace readability

#endif  // READABILITY_ILP_HPP
