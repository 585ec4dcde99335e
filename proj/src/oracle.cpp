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

#include "readability/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace readability {

namespace {

constexpr int kUnset = -1;

// Overlap status of a partially assigned pair. `left` is read as a suffix
// source and `right` as a prefix source; kUnset entries are unknown.
// Returns false when the pair already contradicts `want_overlap`.
bool pair_consistent(const int* left, int left_len, const int* right,
                     int right_len, bool want_overlap) {
  const int limit = std::min(left_len, right_len);
  for (int k = 1; k <= limit; ++k) {
    bool impossible = false;
    bool decided = true;
    const int* a = left + (left_len - k);
    for (int j = 0; j < k; ++j) {
      if (a[j] == kUnset || right[j] == kUnset) {
        decided = false;
      } else if (a[j] != right[j]) {
        impossible = true;
        break;
      }
    }
    if (want_overlap && !impossible) return true;
    if (!want_overlap && !impossible && decided) return false;
  }
  return !want_overlap;
}

// Orders vertices so each next vertex has the most already-ordered
// neighbours; ties prefer higher degree, then lower id.
std::vector<Vertex> greedy_order(
    const std::vector<std::vector<Vertex>>& neighbours) {
  const std::size_t n = neighbours.size();
  std::vector<Vertex> order;
  std::vector<int> placed_nbrs(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!have ||
          std::pair(placed_nbrs[v], neighbours[v].size()) >
              std::pair(placed_nbrs[best], neighbours[best].size())) {
        best = v;
        have = true;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : neighbours[best]) ++placed_nbrs[w];
  }
  return order;
}

class BipartiteSearch {
 public:
  BipartiteSearch(const BipartiteGraph& g, int r)
      : g_(g),
        r_(r),
        ns_(g.s_count()),
        val_((g.s_count() + g.t_count()) * static_cast<std::size_t>(r),
             kUnset),
        touched_(g.s_count() + g.t_count(), 0) {
    // Node ids: S vertices first, then T vertices offset by ns_.
    std::vector<std::vector<Vertex>> nbrs(ns_ + g.t_count());
    for (const Edge& e : g.edges()) {
      nbrs[e.s].push_back(static_cast<Vertex>(ns_ + e.t));
      nbrs[ns_ + e.t].push_back(e.s);
    }
    // S strings are filled from the right and T strings from the left, so
    // the positions that decide short overlaps are fixed first.
    for (Vertex node : greedy_order(nbrs)) {
      for (int p = 0; p < r_; ++p) {
        slots_.emplace_back(node, node < ns_ ? r_ - 1 - p : p);
      }
    }
  }

  std::size_t slot_count() const { return slots_.size(); }
  std::uint64_t nodes() const { return nodes_; }

  bool dfs(std::size_t d) {
    ++nodes_;
    if (d == slots_.size()) return true;
    const auto [node, pos] = slots_[d];
    int& cell = val_[node * r_ + pos];
    const int fresh = used_;
    for (int sym = 0; sym <= fresh; ++sym) {
      cell = sym;
      if (sym == fresh) ++used_;
      ++touched_[node];
      if (consistent(node) && dfs(d + 1)) return true;
      --touched_[node];
      if (sym == fresh) --used_;
    }
    cell = kUnset;
    return false;
  }

  // Enumerates consistent assignments of the first `depth` slots.
  void collect(std::size_t d, std::size_t depth,
               std::vector<std::vector<int>>& out) {
    if (d == depth) {
      std::vector<int> prefix;
      for (std::size_t k = 0; k < depth; ++k) {
        prefix.push_back(val_[slots_[k].first * r_ + slots_[k].second]);
      }
      out.push_back(std::move(prefix));
      return;
    }
    const auto [node, pos] = slots_[d];
    int& cell = val_[node * r_ + pos];
    const int fresh = used_;
    for (int sym = 0; sym <= fresh; ++sym) {
      cell = sym;
      if (sym == fresh) ++used_;
      ++touched_[node];
      if (consistent(node)) collect(d + 1, depth, out);
      --touched_[node];
      if (sym == fresh) --used_;
    }
    cell = kUnset;
  }

  void load_prefix(const std::vector<int>& prefix) {
    std::fill(val_.begin(), val_.end(), kUnset);
    std::fill(touched_.begin(), touched_.end(), 0);
    used_ = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const auto [node, pos] = slots_[k];
      val_[node * r_ + pos] = prefix[k];
      ++touched_[node];
      used_ = std::max(used_, prefix[k] + 1);
    }
  }

  BipartiteLabeling labeling() const {
    BipartiteLabeling l;
    l.s.resize(ns_);
    l.t.resize(g_.t_count());
    for (std::size_t node = 0; node < touched_.size(); ++node) {
      String str(val_.begin() + static_cast<std::ptrdiff_t>(node * r_),
                 val_.begin() + static_cast<std::ptrdiff_t>((node + 1) * r_));
      (node < ns_ ? l.s[node] : l.t[node - ns_]) = std::move(str);
    }
    return l;
  }

 private:
  bool consistent(Vertex node) const {
    if (node < ns_) {
      const int* a = &val_[node * r_];
      for (Vertex t = 0; t < g_.t_count(); ++t) {
        if (touched_[ns_ + t] == 0) continue;
        if (!pair_consistent(a, r_, &val_[(ns_ + t) * r_], r_,
                             g_.has_edge(node, t))) {
          return false;
        }
      }
    } else {
      const Vertex t = node - static_cast<Vertex>(ns_);
      const int* b = &val_[node * r_];
      for (Vertex s = 0; s < ns_; ++s) {
        if (touched_[s] == 0) continue;
        if (!pair_consistent(&val_[s * r_], r_, b, r_, g_.has_edge(s, t))) {
          return false;
        }
      }
    }
    return true;
  }

  const BipartiteGraph& g_;
  int r_;
  std::size_t ns_;
  std::vector<std::pair<Vertex, int>> slots_;
  std::vector<int> val_;
  std::vector<int> touched_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
};

std::optional<BipartiteLabeling> parallel_bipartite(const BipartiteGraph& g,
                                                    int r, int threads,
                                                    std::uint64_t* nodes) {
  BipartiteSearch root(g, r);
  const std::size_t depth = std::min<std::size_t>(root.slot_count(), 8);
  std::vector<std::vector<int>> prefixes;
  root.collect(0, depth, prefixes);

  // Prefixes are in sequential DFS order; the lowest index with a solution
  // yields the same witness as a single-threaded run.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> total{root.nodes()};
  std::mutex mu;
  std::optional<BipartiteLabeling> winner;

  auto worker = [&] {
    BipartiteSearch local(g, r);
    std::uint64_t last_nodes = 0;
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= prefixes.size() || k > best.load()) break;
      local.load_prefix(prefixes[k]);
      const bool found = local.dfs(depth);
      total += local.nodes() - last_nodes;
      last_nodes = local.nodes();
      if (found) {
        std::lock_guard<std::mutex> lock(mu);
        if (k < best.load()) {
          best = k;
          winner = local.labeling();
        }
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (nodes != nullptr) *nodes += total.load();
  return winner;
}

class DigraphSearch {
 public:
  DigraphSearch(const Digraph& g, int r)
      : g_(g),
        n_(g.vertex_count()),
        r_(r),
        len_(g.vertex_count(), 0),
        val_(g.vertex_count() * static_cast<std::size_t>(r), kUnset) {
    std::vector<std::vector<Vertex>> nbrs(n_);
    for (const Arc& a : g.arcs()) {
      nbrs[a.tail].push_back(a.head);
      nbrs[a.head].push_back(a.tail);
    }
    order_ = greedy_order(nbrs);
  }

  std::uint64_t nodes() const { return nodes_; }

  bool dfs_vertex(std::size_t oi) {
    if (oi == n_) return true;
    const Vertex v = order_[oi];
    for (int len = 1; len <= r_; ++len) {
      len_[v] = len;
      if (dfs_pos(oi, 0)) return true;
    }
    len_[v] = 0;
    return false;
  }

  DigraphLabeling labeling() const {
    DigraphLabeling l;
    l.strings.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      const auto* base = &val_[v * r_];
      l.strings[v].assign(base, base + len_[v]);
    }
    return l;
  }

 private:
  bool dfs_pos(std::size_t oi, int pos) {
    ++nodes_;
    const Vertex v = order_[oi];
    if (pos == len_[v]) {
      for (std::size_t k = 0; k < oi; ++k) {
        const Vertex w = order_[k];
        if (len_[w] == len_[v] &&
            std::equal(&val_[v * r_], &val_[v * r_] + len_[v],
                       &val_[w * r_])) {
          return false;
        }
      }
      return dfs_vertex(oi + 1);
    }
    int& cell = val_[v * r_ + pos];
    const int fresh = used_;
    for (int sym = 0; sym <= fresh; ++sym) {
      cell = sym;
      if (sym == fresh) ++used_;
      if (consistent(v) && dfs_pos(oi, pos + 1)) return true;
      if (sym == fresh) --used_;
    }
    cell = kUnset;
    return false;
  }

  bool consistent(Vertex v) const {
    const int* a = &val_[v * r_];
    for (Vertex w = 0; w < n_; ++w) {
      if (w == v || len_[w] == 0) continue;
      const int* b = &val_[w * r_];
      if (!pair_consistent(a, len_[v], b, len_[w], g_.has_arc(v, w)) ||
          !pair_consistent(b, len_[w], a, len_[v], g_.has_arc(w, v))) {
        return false;
      }
    }
    return true;
  }

  const Digraph& g_;
  std::size_t n_;
  int r_;
  std::vector<Vertex> order_;
  std::vector<int> len_;
  std::vector<int> val_;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<BipartiteLabeling> find_bipartite_labeling(
    const BipartiteGraph& g, int r, const OracleOptions& opts,
    std::uint64_t* nodes) {
  if (r < 0) return std::nullopt;
  if (r == 0) {
    if (g.edge_count() != 0) return std::nullopt;
    return BipartiteLabeling{std::vector<String>(g.s_count()),
                             std::vector<String>(g.t_count())};
  }
  if (opts.threads > 1) return parallel_bipartite(g, r, opts.threads, nodes);
  BipartiteSearch search(g, r);
  const bool found = search.dfs(0);
  if (nodes != nullptr) *nodes += search.nodes();
  if (!found) return std::nullopt;
  return search.labeling();
}

std::optional<DigraphLabeling> find_digraph_labeling(const Digraph& g, int r,
                                                     std::uint64_t* nodes) {
  if (r < 1) return std::nullopt;
  DigraphSearch search(g, r);
  const bool found = search.dfs_vertex(0);
  if (nodes != nullptr) *nodes += search.nodes();
  if (!found) return std::nullopt;
  return search.labeling();
}

OracleResult<BipartiteLabeling> exact_readability_bipartite(
    const BipartiteGraph& g, int r_max, const OracleOptions& opts) {
  const std::size_t guard = opts.position_guard != 0 ? opts.position_guard
                                                     : kBipartitePositionGuard;
  OracleResult<BipartiteLabeling> out;
  const std::size_t vertices = g.s_count() + g.t_count();
  for (int r = 0; r <= r_max; ++r) {
    if (vertices * static_cast<std::size_t>(r) > guard) {
      out.guard_tripped = true;
      return out;
    }
    if (auto l = find_bipartite_labeling(g, r, opts, &out.nodes)) {
      out.readability = r;
      out.witness = std::move(*l);
      return out;
    }
    out.refuted_below = r + 1;
  }
  return out;
}

OracleResult<DigraphLabeling> exact_readability_digraph(
    const Digraph& g, int r_max, const OracleOptions& opts) {
  const std::size_t guard = opts.position_guard != 0 ? opts.position_guard
                                                     : kDigraphPositionGuard;
  OracleResult<DigraphLabeling> out;
  out.refuted_below = 1;
  for (int r = 1; r <= r_max; ++r) {
    if (g.vertex_count() * static_cast<std::size_t>(r) > guard) {
      out.guard_tripped = true;
      return out;
    }
    if (auto l = find_digraph_labeling(g, r, &out.nodes)) {
      out.readability = r;
      out.witness = std::move(*l);
      return out;
    }
    out.refuted_below = r + 1;
  }
  return out;
}

}  // namespace readability
