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

#include "readability/ilp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "readability/overlap.hpp"

namespace readability {

VarKey VarKey::x(Vertex u, Vertex v, int i, int j) {
  return {VarKind::kX, u, v, static_cast<std::uint16_t>(i),
          static_cast<std::uint16_t>(j)};
}

VarKey VarKey::z2(std::size_t e, int i) {
  return {VarKind::kZ2, static_cast<std::uint32_t>(e), 0,
          static_cast<std::uint16_t>(i), 0};
}

VarKey VarKey::z3(std::size_t e, int i, int l) {
  return {VarKind::kZ3, static_cast<std::uint32_t>(e), 0,
          static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(l)};
}

VarKey VarKey::t(Vertex u, int i) {
  return {VarKind::kT, u, 0, static_cast<std::uint16_t>(i), 0};
}

std::string var_name(const VarKey& k) {
  const auto s = [](auto v) { return std::to_string(v); };
  switch (k.kind) {
    case VarKind::kX:
      return "x_" + s(k.a) + "_" + s(k.b) + "_" + s(k.i) + "_" + s(k.j);
    case VarKind::kZ2:
      return "z_" + s(k.a) + "_" + s(k.i);
    case VarKind::kZ3:
      return "z_" + s(k.a) + "_" + s(k.i) + "_" + s(k.j);
    case VarKind::kT:
      return "t_" + s(k.a) + "_" + s(k.i);
  }
  return {};
}

namespace {

std::size_t triangle(int r) { return static_cast<std::size_t>(r) * (r + 1) / 2; }

// Position of (i, l), i <= l, in the row-major list of such pairs.
std::size_t z3_offset(int r, int i, int l) {
  const std::size_t before = static_cast<std::size_t>(i - 1) * (r + 1) -
                             static_cast<std::size_t>(i - 1) * i / 2;
  return before + static_cast<std::size_t>(l - i);
}

}  // namespace

VarLayout VarLayout::bipartite(const BipartiteGraph& g, int r) {
  VarLayout v;
  v.kind_ = ModelKind::kBipartite;
  v.r_ = r;
  v.n1_ = g.s_count();
  v.n2_ = g.t_count();
  v.m_ = g.edge_count();
  v.x_count_ = v.n1_ * v.n2_ * r * r;
  v.z_count_ = v.m_ * r;
  v.size_ = v.x_count_ + v.z_count_;
  return v;
}

VarLayout VarLayout::digraph(const Digraph& g, int r) {
  VarLayout v;
  v.kind_ = ModelKind::kDigraph;
  v.r_ = r;
  v.n1_ = v.n2_ = g.vertex_count();
  v.m_ = g.arc_count();
  const std::size_t n = v.n1_;
  v.x_count_ = n * (n == 0 ? 0 : n - 1) * r * r;
  v.z_count_ = v.m_ * triangle(r);
  v.size_ = v.x_count_ + v.z_count_ + n * r;
  return v;
}

std::uint32_t VarLayout::x(Vertex u, Vertex v, int i, int j) const {
  std::size_t pair = 0;
  if (kind_ == ModelKind::kBipartite) {
    pair = u * n2_ + v;
  } else {
    pair = u * (n1_ - 1) + (v < u ? v : v - 1);
  }
  return static_cast<std::uint32_t>((pair * r_ + (i - 1)) * r_ + (j - 1));
}

std::uint32_t VarLayout::z2(std::size_t e, int i) const {
  return static_cast<std::uint32_t>(x_count_ + e * r_ + (i - 1));
}

std::uint32_t VarLayout::z3(std::size_t e, int i, int l) const {
  return static_cast<std::uint32_t>(x_count_ + e * triangle(r_) +
                                    z3_offset(r_, i, l));
}

std::uint32_t VarLayout::t(Vertex u, int i) const {
  return static_cast<std::uint32_t>(x_count_ + z_count_ + u * r_ + (i - 1));
}

VarKey VarLayout::key(std::uint32_t index) const {
  std::size_t idx = index;
  const auto r = static_cast<std::size_t>(r_);
  if (idx < x_count_) {
    const int j = static_cast<int>(idx % r) + 1;
    const int i = static_cast<int>((idx / r) % r) + 1;
    const std::size_t pair = idx / (r * r);
    if (kind_ == ModelKind::kBipartite) {
      return VarKey::x(static_cast<Vertex>(pair / n2_),
                       static_cast<Vertex>(pair % n2_), i, j);
    }
    const auto u = static_cast<Vertex>(pair / (n1_ - 1));
    auto v = static_cast<Vertex>(pair % (n1_ - 1));
    if (v >= u) ++v;
    return VarKey::x(u, v, i, j);
  }
  idx -= x_count_;
  if (idx < z_count_) {
    if (kind_ == ModelKind::kBipartite) {
      return VarKey::z2(idx / r, static_cast<int>(idx % r) + 1);
    }
    const std::size_t e = idx / triangle(r_);
    std::size_t off = idx % triangle(r_);
    int i = 1;
    while (off >= static_cast<std::size_t>(r_ - i + 1)) {
      off -= static_cast<std::size_t>(r_ - i + 1);
      ++i;
    }
    return VarKey::z3(e, i, i + static_cast<int>(off));
  }
  idx -= z_count_;
  return VarKey::t(static_cast<Vertex>(idx / r), static_cast<int>(idx % r) + 1);
}

std::optional<std::uint32_t> VarLayout::index(const VarKey& k) const {
  const auto in_pos = [this](int p) { return p >= 1 && p <= r_; };
  switch (k.kind) {
    case VarKind::kX:
      if (k.a >= n1_ || k.b >= n2_ || !in_pos(k.i) || !in_pos(k.j)) break;
      if (kind_ == ModelKind::kDigraph && k.a == k.b) break;
      return x(k.a, k.b, k.i, k.j);
    case VarKind::kZ2:
      if (kind_ != ModelKind::kBipartite || k.a >= m_ || !in_pos(k.i) ||
          k.j != 0) {
        break;
      }
      return z2(k.a, k.i);
    case VarKind::kZ3:
      if (kind_ != ModelKind::kDigraph || k.a >= m_ || !in_pos(k.i) ||
          !in_pos(k.j) || k.j < k.i) {
        break;
      }
      return z3(k.a, k.i, k.j);
    case VarKind::kT:
      if (kind_ != ModelKind::kDigraph || k.a >= n1_ || !in_pos(k.i) ||
          k.j != 0) {
        break;
      }
      return t(k.a, k.i);
  }
  return std::nullopt;
}

std::string RowView::name() const {
  std::string out = family;
  for (int p = 0; p < part_count; ++p) {
    out += '_';
    out += parts[p].first;
    out += std::to_string(parts[p].second);
  }
  return out;
}

namespace {

class RowWriter {
 public:
  explicit RowWriter(const RowSink& sink) : sink_(sink) {}

  RowWriter& begin(const char* family,
                   std::initializer_list<std::pair<char, std::int64_t>> parts) {
    row_.family = family;
    row_.part_count = 0;
    for (const auto& p : parts) row_.parts[row_.part_count++] = p;
    row_.terms.clear();
    return *this;
  }
  RowWriter& add(std::int32_t coef, std::uint32_t var) {
    row_.terms.push_back({coef, var});
    return *this;
  }
  void end(Relation rel, std::int64_t rhs) {
    row_.rel = rel;
    row_.rhs = rhs;
    ++count_;
    if (sink_) sink_(row_);
  }
  std::uint64_t count() const { return count_; }

 private:
  const RowSink& sink_;
  RowView row_;
  std::uint64_t count_ = 0;
};

void require_positive_r(int r) {
  if (r < 1) {
    throw std::invalid_argument("model length r must be at least 1, got " +
                                std::to_string(r));
  }
}

}  // namespace

ModelCounts stream_bipartite_model(const BipartiteGraph& g, int r,
                                   const ModelOptions& opts,
                                   const RowSink& sink) {
  require_positive_r(r);
  const VarLayout lay = VarLayout::bipartite(g, r);
  RowWriter w(sink);
  const auto run = [&](Vertex u, Vertex v, int i) {
    for (int k = i; k <= r; ++k) w.add(1, lay.x(u, v, k, k - i + 1));
  };

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    const auto ei = static_cast<std::int64_t>(e);
    w.begin("edge_cover", {{'e', ei}});
    for (int i = 1; i <= r; ++i) w.add(1, lay.z2(e, i));
    w.end(Relation::kGe, 1);
    for (int i = 1; i <= r; ++i) {
      w.begin("edge_link", {{'e', ei}, {'i', i}});
      run(u, v, i);
      w.add(-(r - i + 1), lay.z2(e, i)).end(Relation::kGe, 0);
    }
    if (opts.tight_rows) {
      for (int i = 1; i <= r; ++i) {
        w.begin("edge_tight", {{'e', ei}, {'i', i}});
        run(u, v, i);
        w.add(-1, lay.z2(e, i)).end(Relation::kLe, r - i);
      }
    }
  }
  for (Vertex u = 0; u < g.s_count(); ++u) {
    for (Vertex v = 0; v < g.t_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      for (int i = 1; i <= r; ++i) {
        w.begin("nonedge", {{'u', u}, {'v', v}, {'i', i}});
        run(u, v, i);
        w.end(Relation::kLe, r - i);
      }
    }
  }
  const auto chain = [&](const char* family, Vertex u, Vertex wv, Vertex v,
                         Vertex q, int i, int j, int k, int l) {
    w.begin(family, {{'u', u}, {'w', wv}, {'v', v}, {'q', q},
                     {'i', i}, {'j', j}, {'k', k}, {'l', l}})
        .add(1, lay.x(u, v, i, j))
        .add(1, lay.x(wv, v, k, j))
        .add(1, lay.x(wv, q, k, l))
        .add(-1, lay.x(u, q, i, l))
        .end(Relation::kLe, 2);
  };
  const auto ns = static_cast<Vertex>(g.s_count());
  const auto nt = static_cast<Vertex>(g.t_count());
  for (Vertex u = 0; u < ns; ++u) {
    for (Vertex wv = u + 1; wv < ns; ++wv) {
      for (Vertex v = 0; v < nt; ++v) {
        for (Vertex q = v + 1; q < nt; ++q) {
          for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
              for (int k = 1; k <= r; ++k) {
                for (int l = 1; l <= r; ++l) {
                  chain("trans", u, wv, v, q, i, j, k, l);
                }
              }
            }
          }
        }
      }
    }
  }
  if (opts.closure) {
    for (Vertex u = 0; u < ns; ++u) {
      for (Vertex wv = 0; wv < ns; ++wv) {
        for (Vertex v = 0; v < nt; ++v) {
          for (Vertex q = 0; q < nt; ++q) {
            if (u < wv && v < q) continue;  // already a trans row
            for (int i = 1; i <= r; ++i) {
              for (int j = 1; j <= r; ++j) {
                for (int k = 1; k <= r; ++k) {
                  if (u == wv && i == k) continue;  // trivially true
                  for (int l = 1; l <= r; ++l) {
                    if (v == q && j == l) continue;
                    chain("closure", u, wv, v, q, i, j, k, l);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return {lay.size(), w.count()};
}

ModelCounts stream_digraph_model(const Digraph& g, int r,
                                 const ModelOptions& opts,
                                 const RowSink& sink) {
  require_positive_r(r);
  const VarLayout lay = VarLayout::digraph(g, r);
  const auto n = static_cast<Vertex>(g.vertex_count());
  RowWriter w(sink);
  const auto run = [&](Vertex u, Vertex v, int from, int to) {
    for (int k = from; k <= to; ++k) w.add(1, lay.x(u, v, k, k - from + 1));
  };

  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const auto [u, v] = g.arcs()[e];
    const auto ei = static_cast<std::int64_t>(e);
    w.begin("edge_cover", {{'e', ei}});
    for (int i = 1; i <= r; ++i) {
      for (int l = i; l <= r; ++l) w.add(1, lay.z3(e, i, l));
    }
    w.end(Relation::kGe, 1);
    for (int i = 1; i <= r; ++i) {
      for (int l = i; l <= r; ++l) {
        w.begin("edge_link", {{'e', ei}, {'i', i}, {'l', l}});
        run(u, v, i, l);
        w.add(-(l - i + 1), lay.z3(e, i, l)).end(Relation::kGe, 0);
      }
    }
    for (int i = 1; i <= r; ++i) {
      for (int l = i; l <= r; ++l) {
        w.begin("edge_end", {{'e', ei}, {'i', i}, {'l', l}});
        if (l < r) {
          w.add(1, lay.t(u, l + 1)).add(-1, lay.z3(e, i, l));
          w.end(Relation::kGe, 0);
        } else {
          // t_u_(r+1) is the constant 1.
          w.add(-1, lay.z3(e, i, l)).end(Relation::kGe, -1);
        }
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || g.has_arc(u, v)) continue;
      for (int i = 1; i < r; ++i) {
        for (int l = 1; l <= i; ++l) {
          w.begin("nonedge_short", {{'u', u}, {'v', v}, {'i', i}, {'l', l}});
          w.add(1, lay.t(u, i + 1));
          run(u, v, l, i);
          w.end(Relation::kLe, i - l + 1);
        }
      }
      for (int l = 1; l <= r; ++l) {
        w.begin("nonedge_full", {{'u', u}, {'v', v}, {'l', l}});
        run(u, v, l, r);
        w.end(Relation::kLe, r - l);
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        for (int i = 1; i <= r; ++i) {
          for (int j = 1; j <= r; ++j) {
            for (int k = 1; k <= r; ++k) {
              w.begin("trans", {{'u', u}, {'v', v}, {'w', x},
                                {'i', i}, {'j', j}, {'k', k}})
                  .add(1, lay.x(u, v, i, j))
                  .add(1, lay.x(v, x, j, k))
                  .add(-1, lay.x(u, x, i, k))
                  .end(Relation::kLe, 1);
            }
          }
        }
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 1; i < r; ++i) {
      w.begin("tmono", {{'u', u}, {'i', i}})
          .add(1, lay.t(u, i))
          .add(-1, lay.t(u, i + 1))
          .end(Relation::kLe, 0);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      w.begin("inject", {{'u', u}, {'v', v}});
      for (int i = 1; i <= r; ++i) w.add(1, lay.x(u, v, i, i));
      w.end(Relation::kLe, r - 1);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          w.begin("sym", {{'u', u}, {'v', v}, {'i', i}, {'j', j}})
              .add(1, lay.x(u, v, i, j))
              .add(-1, lay.x(v, u, j, i))
              .end(Relation::kEq, 0);
        }
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          w.begin("null_head", {{'u', u}, {'v', v}, {'i', i}, {'j', j}})
              .add(1, lay.x(u, v, i, j))
              .add(1, lay.t(v, j))
              .end(Relation::kLe, 1);
          w.begin("null_tail", {{'u', u}, {'v', v}, {'i', i}, {'j', j}})
              .add(1, lay.x(u, v, i, j))
              .add(1, lay.t(u, i))
              .end(Relation::kLe, 1);
        }
      }
    }
  }
  if (opts.closure) {
    // u(k) = v(j) = u(i) = x(l) implies u(k) = x(l).
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (v == u) continue;
        for (Vertex x = 0; x < n; ++x) {
          if (x == u) continue;
          for (int i = 1; i <= r; ++i) {
            for (int k = 1; k <= r; ++k) {
              if (i == k) continue;
              for (int j = 1; j <= r; ++j) {
                for (int l = 1; l <= r; ++l) {
                  if (x == v && j == l) continue;
                  w.begin("closure", {{'u', u}, {'v', v}, {'w', x}, {'i', i},
                                      {'j', j}, {'k', k}, {'l', l}})
                      .add(1, lay.x(u, v, k, j))
                      .add(1, lay.x(u, v, i, j))
                      .add(1, lay.x(u, x, i, l))
                      .add(-1, lay.x(u, x, k, l))
                      .end(Relation::kLe, 2);
                }
              }
            }
          }
        }
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (int len = 1; len < r; ++len) {
          w.begin("inject_len", {{'u', u}, {'v', v}, {'L', len}});
          for (int i = 1; i <= len; ++i) w.add(1, lay.x(u, v, i, i));
          w.add(1, lay.t(u, len + 1)).add(1, lay.t(v, len + 1));
          w.end(Relation::kLe, len + 1);
        }
      }
    }
  }
  return {lay.size(), w.count()};
}

ModelCounts bipartite_model_counts(std::size_t s_count, std::size_t t_count,
                                   std::size_t m, int r,
                                   const ModelOptions& opts) {
  const std::uint64_t rr = static_cast<std::uint64_t>(r);
  const std::uint64_t r4 = rr * rr * rr * rr;
  const std::uint64_t pairs = static_cast<std::uint64_t>(s_count) * t_count;
  const std::uint64_t cs = s_count * (s_count - (s_count > 0)) / 2;
  const std::uint64_t ct = t_count * (t_count - (t_count > 0)) / 2;
  ModelCounts c;
  c.variables = pairs * rr * rr + m * rr;
  c.constraints = m + m * rr + (opts.tight_rows ? m * rr : 0) +
                  (pairs - m) * rr + cs * ct * r4;
  if (opts.closure) {
    const std::uint64_t sp = s_count * rr;
    const std::uint64_t tp = t_count * rr;
    const std::uint64_t spairs = sp * (sp - (sp > 0));
    const std::uint64_t tpairs = tp * (tp - (tp > 0));
    c.constraints += spairs * tpairs - cs * ct * r4;
  }
  return c;
}

ModelCounts digraph_model_counts(std::size_t n, std::size_t m, int r,
                                 const ModelOptions& opts) {
  const std::uint64_t rr = static_cast<std::uint64_t>(r);
  const std::uint64_t ordered = n * (n - (n > 0));
  const std::uint64_t unordered = ordered / 2;
  const std::uint64_t triples = n < 3 ? 0 : ordered * (n - 2);
  const std::uint64_t tri = rr * (rr + 1) / 2;
  ModelCounts c;
  c.variables = ordered * rr * rr + m * tri + n * rr;
  c.constraints = m + 2 * m * tri + (ordered - m) * (rr * (rr - 1) / 2 + rr) +
                  triples * rr * rr * rr + n * (rr - 1) + unordered +
                  unordered * rr * rr + 2 * ordered * rr * rr;
  if (opts.closure && n > 0) {
    c.constraints += ordered * rr * rr * (rr - 1) * ((n - 1) * rr - 1) +
                     unordered * (rr - 1);
  }
  return c;
}

namespace {

void write_terms(std::ostream& os, const std::vector<LinearTerm>& terms,
                 const VarLayout& lay) {
  bool first = true;
  for (const LinearTerm& t : terms) {
    const std::int32_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      if (t.coef < 0) os << "- ";
    } else {
      os << (t.coef < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << ' ';
    os << var_name(lay.key(t.var));
    first = false;
  }
}

const char* relation_text(Relation rel) {
  switch (rel) {
    case Relation::kLe:
      return " <= ";
    case Relation::kGe:
      return " >= ";
    case Relation::kEq:
      return " = ";
  }
  return " ";
}

void write_header(std::ostream& os) {
  os << "Minimize\n obj: 0\nSubject To\n";
}

void write_footer(std::ostream& os, const VarLayout& lay) {
  os << "Binary\n";
  for (std::uint32_t v = 0; v < lay.size(); ++v) {
    os << ' ' << var_name(lay.key(v)) << '\n';
  }
  os << "End\n";
}

RowSink lp_sink(std::ostream& os, const VarLayout& lay) {
  return [&os, &lay](const RowView& row) {
    os << ' ' << row.name() << ": ";
    write_terms(os, row.terms, lay);
    os << relation_text(row.rel) << row.rhs << '\n';
  };
}

template <typename G, typename Stream>
IlpModel build_model(const G& g, int r, const ModelOptions& opts,
                     VarLayout lay, Stream stream) {
  IlpModel m;
  m.r = r;
  m.options = opts;
  m.layout = lay;
  m.variables.reserve(lay.size());
  for (std::uint32_t v = 0; v < lay.size(); ++v) {
    m.variables.push_back(lay.key(v));
  }
  stream(g, r, opts, [&m](const RowView& row) {
    m.constraints.push_back({row.name(), row.terms, row.rel, row.rhs});
  });
  return m;
}

}  // namespace

IlpModel build_bipartite_model(const BipartiteGraph& g, int r,
                               const ModelOptions& opts) {
  require_positive_r(r);
  IlpModel m = build_model(g, r, opts, VarLayout::bipartite(g, r),
                           stream_bipartite_model);
  m.kind = ModelKind::kBipartite;
  m.bipartite = g;
  return m;
}

IlpModel build_digraph_model(const Digraph& g, int r,
                             const ModelOptions& opts) {
  require_positive_r(r);
  IlpModel m =
      build_model(g, r, opts, VarLayout::digraph(g, r), stream_digraph_model);
  m.kind = ModelKind::kDigraph;
  m.digraph = g;
  return m;
}

std::string emit_lp(const IlpModel& m) {
  std::ostringstream os;
  write_header(os);
  for (const Constraint& c : m.constraints) {
    os << ' ' << c.name << ": ";
    write_terms(os, c.terms, m.layout);
    os << relation_text(c.rel) << c.rhs << '\n';
  }
  write_footer(os, m.layout);
  return os.str();
}

void write_lp(const BipartiteGraph& g, int r, const ModelOptions& opts,
              std::ostream& os) {
  require_positive_r(r);
  const VarLayout lay = VarLayout::bipartite(g, r);
  write_header(os);
  stream_bipartite_model(g, r, opts, lp_sink(os, lay));
  write_footer(os, lay);
}

void write_lp(const Digraph& g, int r, const ModelOptions& opts,
              std::ostream& os) {
  require_positive_r(r);
  const VarLayout lay = VarLayout::digraph(g, r);
  write_header(os);
  stream_digraph_model(g, r, opts, lp_sink(os, lay));
  write_footer(os, lay);
}

std::vector<std::uint8_t> to_dense(const IlpModel& m, const Assignment& a) {
  std::vector<std::uint8_t> values(m.variables.size(), 2);
  for (const auto& [key, value] : a) {
    const auto idx = m.layout.index(key);
    if (!idx) {
      throw std::invalid_argument("assignment names unknown variable " +
                                  var_name(key));
    }
    if (value != 0 && value != 1) {
      throw std::invalid_argument("variable " + var_name(key) +
                                  " is not binary");
    }
    values[*idx] = static_cast<std::uint8_t>(value);
  }
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] == 2) {
      throw std::invalid_argument("assignment is missing variable " +
                                  var_name(m.variables[v]));
    }
  }
  return values;
}

Assignment from_dense(const IlpModel& m,
                      const std::vector<std::uint8_t>& values) {
  Assignment a;
  for (std::size_t v = 0; v < m.variables.size(); ++v) {
    a.emplace(m.variables[v], values.at(v));
  }
  return a;
}

CheckVerdict check_assignment(const IlpModel& m,
                              const std::vector<std::uint8_t>& values) {
  if (values.size() != m.variables.size()) {
    throw std::invalid_argument("assignment has " +
                                std::to_string(values.size()) +
                                " values, model has " +
                                std::to_string(m.variables.size()));
  }
  for (const Constraint& c : m.constraints) {
    std::int64_t lhs = 0;
    for (const LinearTerm& t : c.terms) lhs += t.coef * values[t.var];
    const bool ok = c.rel == Relation::kLe   ? lhs <= c.rhs
                    : c.rel == Relation::kGe ? lhs >= c.rhs
                                             : lhs == c.rhs;
    if (!ok) return {false, c.name, lhs, c.rhs};
  }
  return {};
}

CheckVerdict check_assignment(const IlpModel& m, const Assignment& a) {
  return check_assignment(m, to_dense(m, a));
}

namespace {

Symbol next_fresh(const std::vector<String>& a, const std::vector<String>& b) {
  Symbol top = 0;
  for (const auto* part : {&a, &b}) {
    for (const String& s : *part) {
      for (Symbol c : s) top = std::max(top, c + 1);
    }
  }
  return top;
}

}  // namespace

Assignment encode_labeling(const BipartiteGraph& g, int r,
                           const BipartiteLabeling& l) {
  require_positive_r(r);
  Verdict v;
  try {
    v = verify_labeling(g, l);
  } catch (const LabelingError& e) {
    throw EncodingError(std::string("cannot encode: ") + e.what());
  }
  if (!v.ok) throw EncodingError("cannot encode: " + v.describe());
  const std::size_t len = l.length();
  if (len > static_cast<std::size_t>(r)) {
    throw EncodingError("labeling length " + std::to_string(len) +
                        " exceeds r = " + std::to_string(r));
  }
  // Fresh symbols occur nowhere else, so padding S in front and T at the
  // back keeps every overlap and adds none.
  Symbol fresh = next_fresh(l.s, l.t);
  const std::size_t pad = static_cast<std::size_t>(r) - len;
  std::vector<String> s(l.s.size());
  std::vector<String> t(l.t.size());
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t p = 0; p < pad; ++p) s[u].push_back(fresh++);
    s[u].insert(s[u].end(), l.s[u].begin(), l.s[u].end());
  }
  for (std::size_t v2 = 0; v2 < t.size(); ++v2) {
    t[v2] = l.t[v2];
    for (std::size_t p = 0; p < pad; ++p) t[v2].push_back(fresh++);
  }

  Assignment a;
  for (Vertex u = 0; u < g.s_count(); ++u) {
    for (Vertex q = 0; q < g.t_count(); ++q) {
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          a[VarKey::x(u, q, i, j)] = s[u][i - 1] == t[q][j - 1] ? 1 : 0;
        }
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, q] = g.edges()[e];
    for (int i = 1; i <= r; ++i) {
      const bool run = std::equal(s[u].begin() + (i - 1), s[u].end(),
                                  t[q].begin());
      a[VarKey::z2(e, i)] = run ? 1 : 0;
    }
  }
  return a;
}

Assignment encode_labeling(const Digraph& g, int r, const DigraphLabeling& l) {
  require_positive_r(r);
  Verdict v;
  try {
    v = verify_labeling(g, l);
  } catch (const LabelingError& e) {
    throw EncodingError(std::string("cannot encode: ") + e.what());
  }
  if (!v.ok) throw EncodingError("cannot encode: " + v.describe());
  if (l.length() > static_cast<std::size_t>(r)) {
    throw EncodingError("labeling length " + std::to_string(l.length()) +
                        " exceeds r = " + std::to_string(r));
  }
  const auto len = [&l](Vertex u) { return static_cast<int>(l.strings[u].size()); };
  Assignment a;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      if (u == w) continue;
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          const bool eq = i <= len(u) && j <= len(w) &&
                          l.strings[u][i - 1] == l.strings[w][j - 1];
          a[VarKey::x(u, w, i, j)] = eq ? 1 : 0;
        }
      }
    }
    for (int i = 1; i <= r; ++i) a[VarKey::t(u, i)] = i > len(u) ? 1 : 0;
  }
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const auto [u, w] = g.arcs()[e];
    for (int i = 1; i <= r; ++i) {
      for (int l2 = i; l2 <= r; ++l2) {
        const int k = l2 - i + 1;
        const bool hit =
            l2 == len(u) && k <= len(w) &&
            std::equal(l.strings[u].begin() + (i - 1), l.strings[u].end(),
                       l.strings[w].begin());
        a[VarKey::z3(e, i, l2)] = hit ? 1 : 0;
      }
    }
  }
  return a;
}

namespace {

constexpr Symbol kUnassigned = ~Symbol{0};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_feasible(const IlpModel& m, const std::vector<std::uint8_t>& v) {
  const CheckVerdict c = check_assignment(m, v);
  if (!c.ok) {
    throw EncodingError("assignment violates row " + c.row + " (lhs " +
                        std::to_string(c.lhs) + ", rhs " +
                        std::to_string(c.rhs) + ")");
  }
}

// Symbols numbered by first occurrence of each class in position order.
std::vector<Symbol> class_symbols(UnionFind& uf, std::size_t count) {
  std::vector<Symbol> sym(count, kUnassigned);
  std::vector<Symbol> of_root(count, kUnassigned);
  Symbol next = 0;
  for (std::size_t p = 0; p < count; ++p) {
    const std::size_t root = uf.find(p);
    if (of_root[root] == kUnassigned) of_root[root] = next++;
    sym[p] = of_root[root];
  }
  return sym;
}

}  // namespace

BipartiteLabeling decode_bipartite(const IlpModel& m, const Assignment& a) {
  if (m.kind != ModelKind::kBipartite) {
    throw std::invalid_argument("decode_bipartite on a digraph model");
  }
  const std::vector<std::uint8_t> v = to_dense(m, a);
  require_feasible(m, v);
  const BipartiteGraph& g = m.bipartite;
  const int r = m.r;
  const std::size_t ns = g.s_count();
  const auto s_pos = [r](Vertex u, int i) { return u * r + (i - 1); };
  const auto t_pos = [r, ns](Vertex q, int j) { return (ns + q) * r + (j - 1); };
  const std::size_t count = (ns + g.t_count()) * r;

  UnionFind uf(count);
  for (Vertex u = 0; u < ns; ++u) {
    for (Vertex q = 0; q < g.t_count(); ++q) {
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          if (v[m.layout.x(u, q, i, j)] != 0) uf.unite(s_pos(u, i), t_pos(q, j));
        }
      }
    }
  }
  for (Vertex u = 0; u < ns; ++u) {
    for (Vertex q = 0; q < g.t_count(); ++q) {
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
          const bool same = uf.find(s_pos(u, i)) == uf.find(t_pos(q, j));
          if (same != (v[m.layout.x(u, q, i, j)] != 0)) {
            throw EncodingError("x-variables are not transitively closed at " +
                                var_name(VarKey::x(u, q, i, j)));
          }
        }
      }
    }
  }
  const std::vector<Symbol> sym = class_symbols(uf, count);
  BipartiteLabeling l;
  l.s.resize(ns);
  l.t.resize(g.t_count());
  for (Vertex u = 0; u < ns; ++u) {
    for (int i = 1; i <= r; ++i) l.s[u].push_back(sym[s_pos(u, i)]);
  }
  for (Vertex q = 0; q < g.t_count(); ++q) {
    for (int j = 1; j <= r; ++j) l.t[q].push_back(sym[t_pos(q, j)]);
  }
  return l;
}

DigraphLabeling decode_digraph(const IlpModel& m, const Assignment& a) {
  if (m.kind != ModelKind::kDigraph) {
    throw std::invalid_argument("decode_digraph on a bipartite model");
  }
  const std::vector<std::uint8_t> v = to_dense(m, a);
  require_feasible(m, v);
  const Digraph& g = m.digraph;
  const int r = m.r;
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<int> len(n, r);
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 1; i <= r; ++i) {
      if (v[m.layout.t(u, i)] != 0) {
        len[u] = i - 1;
        break;
      }
    }
  }
  const auto pos = [r](Vertex u, int i) { return u * r + (i - 1); };
  const std::size_t count = static_cast<std::size_t>(n) * r;
  UnionFind uf(count);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      if (u == w) continue;
      for (int i = 1; i <= len[u]; ++i) {
        for (int j = 1; j <= len[w]; ++j) {
          if (v[m.layout.x(u, w, i, j)] != 0) uf.unite(pos(u, i), pos(w, j));
        }
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      if (u == w) continue;
      for (int i = 1; i <= len[u]; ++i) {
        for (int j = 1; j <= len[w]; ++j) {
          const bool same = uf.find(pos(u, i)) == uf.find(pos(w, j));
          if (same != (v[m.layout.x(u, w, i, j)] != 0)) {
            throw EncodingError("x-variables are not transitively closed at " +
                                var_name(VarKey::x(u, w, i, j)));
          }
        }
      }
    }
  }
  const std::vector<Symbol> sym = class_symbols(uf, count);
  // Symbols of null positions are never used, so count + u is fresh.
  DigraphLabeling l;
  l.strings.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 1; i <= len[u]; ++i) l.strings[u].push_back(sym[pos(u, i)]);
    if (l.strings[u].empty()) {
      l.strings[u].push_back(static_cast<Symbol>(count + u));
    }
  }
  std::set<String> seen;
  for (Vertex u = 0; u < n; ++u) {
    if (!seen.insert(l.strings[u]).second) {
      throw EncodingError("decoded strings are not distinct at vertex " +
                          std::to_string(u));
    }
  }
  return l;
}

}  // namespace readability
