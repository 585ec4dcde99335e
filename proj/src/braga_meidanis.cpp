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

#include "readability/braga_meidanis.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace readability {

namespace {

constexpr int kFree = -1;

int first_free(const std::vector<int>& slots) {
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (slots[c] == kFree) return static_cast<int>(c);
  }
  return kFree;
}

}  // namespace

Decomposition bipartite_edge_coloring(const BipartiteGraph& g) {
  const std::size_t delta = g.max_degree();
  // at_s[s][c] is the T endpoint of the c-coloured edge at s, or kFree.
  std::vector<std::vector<int>> at_s(g.s_count(),
                                     std::vector<int>(delta, kFree));
  std::vector<std::vector<int>> at_t(g.t_count(),
                                     std::vector<int>(delta, kFree));

  for (const Edge& e : g.edges()) {
    const int a = first_free(at_s[e.s]);
    const int b = first_free(at_t[e.t]);
    assert(a != kFree && b != kFree);
    if (at_t[e.t][a] != kFree) {
      // Walk the a/b alternating path from e.t and swap its colours; it
      // cannot reach e.s because e.s is missing colour a.
      std::vector<std::pair<int, int>> path;  // (s, t) edges along the path
      int t = static_cast<int>(e.t);
      int colour = a;
      int other = b;
      while (true) {
        const int s = at_t[t][colour];
        if (s == kFree) break;
        path.emplace_back(s, t);
        const int next_t = at_s[s][other];
        if (next_t == kFree) break;
        path.emplace_back(s, next_t);
        t = next_t;
      }
      // Clear, then re-insert with swapped colours.
      for (std::size_t k = 0; k < path.size(); ++k) {
        const auto [s, t2] = path[k];
        const int c = (k % 2 == 0) ? a : b;
        at_s[s][c] = kFree;
        at_t[t2][c] = kFree;
      }
      for (std::size_t k = 0; k < path.size(); ++k) {
        const auto [s, t2] = path[k];
        const int c = (k % 2 == 0) ? b : a;
        at_s[s][c] = t2;
        at_t[t2][c] = s;
      }
    }
    at_s[e.s][a] = static_cast<int>(e.t);
    at_t[e.t][a] = static_cast<int>(e.s);
  }

  Decomposition out;
  out.k = static_cast<int>(delta);
  out.colors.assign(g.edge_count(), 0);
  for (Vertex s = 0; s < g.s_count(); ++s) {
    for (std::size_t c = 0; c < delta; ++c) {
      if (at_s[s][c] != kFree) {
        const auto idx = g.edge_index(s, static_cast<Vertex>(at_s[s][c]));
        out.colors[static_cast<std::size_t>(idx)] = static_cast<int>(c) + 1;
      }
    }
  }
  return out;
}

DirectedMatchingCover directed_edge_coloring(const Digraph& g) {
  // Split graph: tail copies on the S side, head copies on the T side.
  const BipartiteGraph split = digraph_to_bipartite(g);
  const Decomposition colouring = bipartite_edge_coloring(split);
  DirectedMatchingCover cover;
  cover.matchings.resize(static_cast<std::size_t>(colouring.k));
  for (std::size_t k = 0; k < split.edge_count(); ++k) {
    const Edge& e = split.edges()[k];
    cover.matchings[static_cast<std::size_t>(colouring.colors[k] - 1)]
        .push_back({e.s, e.t});
  }
  for (auto& m : cover.matchings) std::sort(m.begin(), m.end());
  return cover;
}

DigraphLabeling bm_label(const Digraph& g, BmTrace* trace) {
  const std::size_t n = g.vertex_count();
  std::vector<String> pref(n);
  std::vector<String> suff(n);
  Symbol next = 0;

  const DirectedMatchingCover cover = directed_edge_coloring(g);
  for (const auto& matching : cover.matchings) {
    for (const Arc& a : matching) {
      String& p = pref[a.head];
      p.push_back(next++);
      p.insert(p.end(), suff[a.tail].begin(), suff[a.tail].end());
      suff[a.tail] = p;
    }
    if (trace != nullptr) {
      std::size_t longest = 0;
      for (Vertex v = 0; v < n; ++v) {
        longest = std::max({longest, pref[v].size(), suff[v].size()});
      }
      trace->max_buffer_after.push_back(longest);
    }
  }

  DigraphLabeling out;
  out.strings.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    String s = pref[v];
    s.push_back(next++);
    s.insert(s.end(), suff[v].begin(), suff[v].end());
    out.strings[v] = std::move(s);
  }
  if (trace != nullptr) trace->symbols_used = next;
  return out;
}

}  // namespace readability
