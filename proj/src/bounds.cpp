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

#include "readability/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "readability/overlap.hpp"

namespace readability {

namespace {

std::size_t set_difference_size(const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
  std::size_t count = 0;
  auto it = b.begin();
  for (Vertex x : a) {
    while (it != b.end() && *it < x) ++it;
    if (it == b.end() || *it != x) ++count;
  }
  return count;
}

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.s) + "," + std::to_string(e.t) + ")";
}

}  // namespace

Readability1Result readability1_check(const BipartiteGraph& g) {
  const std::size_t ns = g.s_count();
  std::vector<int> comp(ns + g.t_count(), -1);
  Readability1Result out;
  out.ok = true;
  for (Vertex start = 0; start < ns; ++start) {
    if (comp[start] >= 0 || g.s_neighbors(start).empty()) continue;
    const int id = static_cast<int>(out.components.size());
    Biclique b;
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      if (node < ns) {
        b.s.push_back(static_cast<Vertex>(node));
        for (Vertex t : g.s_neighbors(static_cast<Vertex>(node))) {
          if (comp[ns + t] < 0) {
            comp[ns + t] = id;
            stack.push_back(ns + t);
          }
        }
      } else {
        b.t.push_back(static_cast<Vertex>(node - ns));
        for (Vertex s : g.t_neighbors(static_cast<Vertex>(node - ns))) {
          if (comp[s] < 0) {
            comp[s] = id;
            stack.push_back(s);
          }
        }
      }
    }
    std::sort(b.s.begin(), b.s.end());
    std::sort(b.t.begin(), b.t.end());
    for (Vertex s : b.s) {
      if (g.s_neighbors(s).size() != b.t.size()) out.ok = false;
    }
    out.components.push_back(std::move(b));
  }
  return out;
}

std::optional<std::size_t> distinctness(const BipartiteGraph& g) {
  if (g.s_count() < 2 || g.t_count() < 2) return std::nullopt;
  std::size_t best = SIZE_MAX;
  auto scan = [&best](std::size_t count, auto&& nbrs) {
    for (Vertex u = 0; u < count; ++u) {
      for (Vertex v = u + 1; v < count; ++v) {
        const std::size_t d = std::max(set_difference_size(nbrs(u), nbrs(v)),
                                       set_difference_size(nbrs(v), nbrs(u)));
        best = std::min(best, d);
      }
    }
  };
  scan(g.s_count(), [&g](Vertex v) -> const auto& { return g.s_neighbors(v); });
  scan(g.t_count(), [&g](Vertex v) -> const auto& { return g.t_neighbors(v); });
  return best;
}

std::optional<int> distinctness_lower_bound(const BipartiteGraph& g) {
  const auto dt = distinctness(g);
  if (!dt || g.max_degree() < 2) return std::nullopt;
  return static_cast<int>(*dt) + 1;
}

BipartiteGraph inner_product_graph(int n) {
  if (n < 1) throw std::invalid_argument("inner_product_graph requires n >= 1");
  if (n >= 16) {
    throw GuardError("inner_product_graph: n must be below 16, got " +
                     std::to_string(n));
  }
  // Reading a vector's first coordinate as the most significant bit makes
  // lexicographic order coincide with numeric order 1 .. 2^n - 1.
  const std::uint32_t count = (1u << n) - 1;
  std::vector<Edge> edges;
  for (std::uint32_t a = 1; a <= count; ++a) {
    for (std::uint32_t b = 1; b <= count; ++b) {
      if (std::popcount(a & b) % 2 == 1) edges.push_back({a - 1, b - 1});
    }
  }
  return BipartiteGraph(count, count, std::move(edges));
}

namespace {

// Induced 6-cycles and dominoes on three S and three T vertices, with edges
// given as indices into g.edges().
struct Patterns {
  std::vector<std::array<std::size_t, 6>> cycles;
  struct Domino {
    std::array<std::size_t, 7> edges;
    std::array<std::array<std::size_t, 2>, 2> admissible;
  };
  std::vector<Domino> dominoes;
};

template <typename F>
void for_each_triple(std::size_t n, F&& f) {
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) f(std::array<Vertex, 3>{a, b, c});
    }
  }
}

Patterns find_patterns(const BipartiteGraph& g) {
  Patterns p;
  for_each_triple(g.s_count(), [&](const std::array<Vertex, 3>& ss) {
    for_each_triple(g.t_count(), [&](const std::array<Vertex, 3>& ts) {
      std::vector<std::size_t> present;
      std::vector<std::pair<int, int>> absent;
      int s_deg[3] = {0, 0, 0};
      int t_deg[3] = {0, 0, 0};
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const auto idx = g.edge_index(ss[a], ts[b]);
          if (idx >= 0) {
            present.push_back(static_cast<std::size_t>(idx));
            ++s_deg[a];
            ++t_deg[b];
          } else {
            absent.emplace_back(a, b);
          }
        }
      }
      // The complement within K_{3,3} is a perfect matching (C6) or a
      // two-edge matching (domino); both are detected via degrees.
      if (present.size() == 6 &&
          std::all_of(s_deg, s_deg + 3, [](int d) { return d == 2; }) &&
          std::all_of(t_deg, t_deg + 3, [](int d) { return d == 2; })) {
        std::array<std::size_t, 6> c{};
        std::copy(present.begin(), present.end(), c.begin());
        p.cycles.push_back(c);
        return;
      }
      if (present.size() != 7 || absent[0].first == absent[1].first ||
          absent[0].second == absent[1].second) {
        return;
      }
      Patterns::Domino d{};
      std::copy(present.begin(), present.end(), d.edges.begin());
      const int hs = static_cast<int>(std::find(s_deg, s_deg + 3, 3) - s_deg);
      const int ht = static_cast<int>(std::find(t_deg, t_deg + 3, 3) - t_deg);
      int side = 0;
      for (int x = 0; x < 3; ++x) {
        if (x == hs) continue;
        for (int y = 0; y < 3; ++y) {
          if (y == ht || !g.has_edge(ss[x], ts[y])) continue;
          std::array<std::size_t, 2> set{
              static_cast<std::size_t>(g.edge_index(ss[x], ts[ht])),
              static_cast<std::size_t>(g.edge_index(ss[hs], ts[y]))};
          std::sort(set.begin(), set.end());
          d.admissible[side++] = set;
        }
      }
      p.dominoes.push_back(d);
    });
  });
  return p;
}

// in_m[k] is true when g.edges()[k] belongs to the matching.
MatchingVerdict check_with_patterns(const BipartiteGraph& g,
                                    const Patterns& p,
                                    const std::vector<bool>& in_m) {
  for (const auto& c : p.cycles) {
    const auto hits = std::count_if(c.begin(), c.end(),
                                    [&](std::size_t k) { return in_m[k]; });
    if (hits != 3) {
      return {false, 2,
              "induced C6 through " + edge_str(g.edges()[c[0]]) + " meets M in " +
                  std::to_string(hits) + " edges"};
    }
  }
  for (const auto& d : p.dominoes) {
    std::vector<std::size_t> hit;
    for (std::size_t k : d.edges) {
      if (in_m[k]) hit.push_back(k);
    }
    std::sort(hit.begin(), hit.end());
    const bool ok = std::any_of(
        d.admissible.begin(), d.admissible.end(), [&](const auto& set) {
          return hit.size() == 2 && hit[0] == set[0] && hit[1] == set[1];
        });
    if (!ok) {
      return {false, 3,
              "induced domino through " + edge_str(g.edges()[d.edges[0]]) +
                  " meets M in an inadmissible set"};
    }
  }
  std::vector<Edge> rest;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!in_m[k]) rest.push_back(g.edges()[k]);
  }
  if (!readability1_check(BipartiteGraph(g.s_count(), g.t_count(), rest)).ok) {
    return {false, 1, "G - M is not a disjoint union of bicliques"};
  }
  return {};
}

}  // namespace

MatchingVerdict feasible_matching_check(const BipartiteGraph& g,
                                        const std::vector<Edge>& m) {
  std::vector<bool> in_m(g.edge_count(), false);
  std::vector<bool> s_used(g.s_count(), false);
  std::vector<bool> t_used(g.t_count(), false);
  for (const Edge& e : m) {
    const auto idx = g.edge_index(e.s, e.t);
    if (idx < 0) {
      throw std::invalid_argument(edge_str(e) + " is not an edge");
    }
    if (s_used[e.s] || t_used[e.t]) {
      throw std::invalid_argument("edge set is not a matching at " +
                                  edge_str(e));
    }
    s_used[e.s] = t_used[e.t] = true;
    in_m[static_cast<std::size_t>(idx)] = true;
  }
  return check_with_patterns(g, find_patterns(g), in_m);
}

bool readability2_bruteforce(const BipartiteGraph& g,
                             std::vector<Edge>* witness) {
  const TwinReduction red = twin_free_reduction(g);
  const BipartiteGraph& h = red.reduced;
  if (h.edge_count() > kReadability2EdgeGuard) {
    throw GuardError("readability2_bruteforce: twin-free reduction has " +
                     std::to_string(h.edge_count()) + " edges, limit " +
                     std::to_string(kReadability2EdgeGuard));
  }
  const Patterns p = find_patterns(h);
  std::vector<bool> in_m(h.edge_count(), false);
  std::vector<bool> s_used(h.s_count(), false);
  std::vector<bool> t_used(h.t_count(), false);

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == h.edge_count()) {
      if (!check_with_patterns(h, p, in_m).ok) return false;
      if (witness != nullptr) {
        witness->clear();
        for (std::size_t e = 0; e < in_m.size(); ++e) {
          if (in_m[e]) witness->push_back(h.edges()[e]);
        }
      }
      return true;
    }
    if (self(self, k + 1)) return true;
    const Edge& e = h.edges()[k];
    if (s_used[e.s] || t_used[e.t]) return false;
    s_used[e.s] = t_used[e.t] = in_m[k] = true;
    const bool found = self(self, k + 1);
    s_used[e.s] = t_used[e.t] = in_m[k] = false;
    return found;
  };
  return search(search, 0);
}

Decomposition ell_decomposition(const BipartiteGraph& g,
                                const BipartiteLabeling& l) {
  const Verdict v = verify_labeling(g, l);
  if (!v.ok) {
    throw LabelingError("ell_decomposition: labeling is invalid, " +
                        v.describe());
  }
  Decomposition w;
  w.k = static_cast<int>(l.length());
  w.colors.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    w.colors.push_back(
        static_cast<int>(min_overlap_or_zero(l.s[e.s], l.t[e.t])));
  }
  return w;
}

namespace {

void require_complete(const BipartiteGraph& g, const Decomposition& w) {
  if (w.colors.size() != g.edge_count()) {
    throw std::invalid_argument("decomposition colours " +
                                std::to_string(w.colors.size()) +
                                " edges, graph has " +
                                std::to_string(g.edge_count()));
  }
  for (int c : w.colors) {
    if (c < 1 || c > w.k) {
      throw std::invalid_argument("colour " + std::to_string(c) +
                                  " outside 1.." + std::to_string(w.k));
    }
  }
}

// Neighbourhood of a vertex in one colour class, tagged by part so that
// cross-part comparisons are meaningful.
using TaggedSet = std::vector<std::pair<int, Vertex>>;

}  // namespace

HubVerdict hub_verify(const BipartiteGraph& g, const Decomposition& w,
                      HubMode mode) {
  require_complete(g, w);
  const std::size_t ns = g.s_count();
  const std::size_t nv = ns + g.t_count();
  // nbr[c][v]: neighbourhood of combined vertex v in class c (1-based c).
  std::vector<std::vector<TaggedSet>> nbr(
      static_cast<std::size_t>(w.k) + 1, std::vector<TaggedSet>(nv));
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    auto& cls = nbr[static_cast<std::size_t>(w.colors[k])];
    cls[e.s].emplace_back(1, e.t);
    cls[ns + e.t].emplace_back(0, e.s);
  }
  for (int c = 1; c <= w.k; ++c) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      if (w.colors[k] == c) edges.push_back(g.edges()[k]);
    }
    if (!readability1_check(BipartiteGraph(ns, g.t_count(), edges)).ok) {
      return {false, 1, c,
              "class " + std::to_string(c) +
                  " is not a disjoint union of bicliques"};
    }
  }
  auto name = [ns](std::size_t v) {
    return v < ns ? "S" + std::to_string(v) : "T" + std::to_string(v - ns);
  };
  auto pair_ok = [&](int c, std::size_t u, std::size_t v) -> bool {
    const auto& cu = nbr[static_cast<std::size_t>(c)][u];
    if (cu.empty() || cu != nbr[static_cast<std::size_t>(c)][v]) return true;
    for (int j = 1; j < c; ++j) {
      if (nbr[static_cast<std::size_t>(j)][u] !=
          nbr[static_cast<std::size_t>(j)][v]) {
        return false;
      }
    }
    return true;
  };
  for (int c = 2; c <= w.k; ++c) {
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        const bool same_part = (u < ns) == (v < ns);
        if (same_part && mode == HubMode::kLiteral) continue;
        if (!pair_ok(c, u, v)) {
          return {false, 2, c,
                  name(u) + " and " + name(v) + " are twins in class " +
                      std::to_string(c) + " but not in an earlier class"};
        }
      }
    }
  }
  return {};
}

namespace {

// Bitmask form of the strict hub rule for graphs whose non-isolated vertices
// fit in 32 bits per part.
class HubChecker {
 public:
  HubChecker(const BipartiteGraph& g, int k)
      : g_(g),
        k_(k),
        s_nbr_(static_cast<std::size_t>(k) * g.s_count()),
        t_nbr_(static_cast<std::size_t>(k) * g.t_count()) {}

  bool check(const std::vector<int>& colors) {
    std::fill(s_nbr_.begin(), s_nbr_.end(), 0);
    std::fill(t_nbr_.begin(), t_nbr_.end(), 0);
    const std::size_t ns = g_.s_count();
    const std::size_t nt = g_.t_count();
    for (std::size_t e = 0; e < colors.size(); ++e) {
      const std::size_t c = static_cast<std::size_t>(colors[e] - 1);
      const Edge& ed = g_.edges()[e];
      s_nbr_[c * ns + ed.s] |= 1u << ed.t;
      t_nbr_[c * nt + ed.t] |= 1u << ed.s;
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(k_); ++c) {
      const std::uint32_t* sn = &s_nbr_[c * ns];
      const std::uint32_t* tn = &t_nbr_[c * nt];
      // Union of bicliques: S vertices sharing a T neighbour agree, and
      // likewise for T.
      for (std::size_t t = 0; t < nt; ++t) {
        std::uint32_t rest = tn[t];
        if (rest == 0) continue;
        const std::uint32_t ref = sn[std::countr_zero(rest)];
        while (rest != 0) {
          if (sn[std::countr_zero(rest)] != ref) return false;
          rest &= rest - 1;
        }
      }
      if (c == 0) continue;
      if (!twins_ok(c, sn, ns, s_nbr_.data()) ||
          !twins_ok(c, tn, nt, t_nbr_.data())) {
        return false;
      }
    }
    return true;
  }

 private:
  static bool twins_ok(std::size_t c, const std::uint32_t* cur,
                       std::size_t count, const std::uint32_t* all) {
    for (std::size_t u = 0; u < count; ++u) {
      if (cur[u] == 0) continue;
      for (std::size_t v = u + 1; v < count; ++v) {
        if (cur[v] != cur[u]) continue;
        for (std::size_t j = 0; j < c; ++j) {
          if (all[j * count + u] != all[j * count + v]) return false;
        }
      }
    }
    return true;
  }

  const BipartiteGraph& g_;
  int k_;
  std::vector<std::uint32_t> s_nbr_;
  std::vector<std::uint32_t> t_nbr_;
};

BipartiteGraph drop_isolated(const BipartiteGraph& g) {
  std::vector<Vertex> keep_s;
  std::vector<Vertex> keep_t;
  for (Vertex s = 0; s < g.s_count(); ++s) {
    if (!g.s_neighbors(s).empty()) keep_s.push_back(s);
  }
  for (Vertex t = 0; t < g.t_count(); ++t) {
    if (!g.t_neighbors(t).empty()) keep_t.push_back(t);
  }
  return induced_subgraph(g, keep_s, keep_t);
}

}  // namespace

std::optional<int> hub_bruteforce(const BipartiteGraph& g, int k_max,
                                  Decomposition* witness) {
  if (g.edge_count() > kHubEdgeGuard) {
    throw GuardError("hub_bruteforce: graph has " +
                     std::to_string(g.edge_count()) + " edges, limit " +
                     std::to_string(kHubEdgeGuard));
  }
  if (g.edge_count() == 0) {
    if (witness != nullptr) *witness = Decomposition{};
    return 0;
  }
  // Isolated vertices never take part in either clause; dropping them keeps
  // both parts within 32 vertices and preserves the edge order.
  const BipartiteGraph h = drop_isolated(g);
  const std::size_t m = h.edge_count();
  for (int k = 1; k <= k_max; ++k) {
    HubChecker checker(h, k);
    std::vector<int> colors(m, 1);
    while (true) {
      if (checker.check(colors)) {
        if (witness != nullptr) *witness = Decomposition{k, colors};
        return k;
      }
      std::size_t pos = 0;
      while (pos < m && colors[pos] == k) colors[pos++] = 1;
      if (pos == m) break;
      ++colors[pos];
    }
  }
  return std::nullopt;
}

BoundsReport bounds_report(const BipartiteGraph& g) {
  BoundsReport r;
  const bool has_edges = g.edge_count() > 0;
  r.distinctness = distinctness(g);
  r.distinctness_lower = distinctness_lower_bound(g);
  r.readability1 = readability1_check(g).ok;
  try {
    r.readability2 = readability2_bruteforce(g);
  } catch (const GuardError&) {
  }
  const int delta = static_cast<int>(g.max_degree());
  if (g.edge_count() <= kHubEdgeGuard) r.hub = hub_bruteforce(g, delta);
  if (r.hub) {
    r.hub_lower = *r.hub;
    r.hub_upper = (1 << *r.hub) - 1;
  } else {
    r.hub_lower = has_edges ? 1 : 0;
    r.hub_upper = delta >= 31 ? INT_MAX : (1 << delta) - 1;
  }

  r.lower = std::max(r.hub_lower, r.distinctness_lower.value_or(0));
  if (has_edges) r.lower = std::max(r.lower, 1);
  if (!r.readability1) r.lower = std::max(r.lower, 2);
  if (r.readability2 == false) r.lower = std::max(r.lower, 3);

  r.upper = r.hub_upper;
  if (r.readability1) r.upper = std::min(r.upper, has_edges ? 1 : 0);
  if (r.readability2 == true) r.upper = std::min(r.upper, 2);
  return r;
}

std::string format_report(const BoundsReport& r) {
  auto opt = [](const auto& v) {
    return v ? std::to_string(*v) : std::string("n/a");
  };
  std::ostringstream os;
  os << "distinctness: " << opt(r.distinctness) << '\n'
     << "distinctness_lower: " << opt(r.distinctness_lower) << '\n'
     << "hub: " << (r.hub ? std::to_string(*r.hub) : "unknown") << '\n'
     << "hub_lower: " << r.hub_lower << '\n'
     << "hub_upper: " << r.hub_upper << '\n'
     << "readability1: " << (r.readability1 ? "true" : "false") << '\n'
     << "readability2: "
     << (r.readability2 ? (*r.readability2 ? "true" : "false") : "unknown")
     << '\n'
     << "lower: " << r.lower << '\n'
     << "upper: " << r.upper << '\n';
  return os.str();
}

}  // namespace readability
