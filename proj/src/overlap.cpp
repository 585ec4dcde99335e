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

#include "readability/overlap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace readability {

std::size_t min_overlap_or_zero(const String& a, const String& b) {
  const std::size_t limit = std::min(a.size(), b.size());
  for (std::size_t k = 1; k <= limit; ++k) {
    if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(),
                   b.begin())) {
      return k;
    }
  }
  return 0;
}

std::size_t min_overlap(const String& a, const String& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("min_overlap of an empty string");
  }
  return min_overlap_or_zero(a, b);
}

Digraph overlap_digraph(const std::vector<String>& strings) {
  std::set<String> seen;
  for (std::size_t v = 0; v < strings.size(); ++v) {
    if (strings[v].empty()) {
      throw LabelingError("string " + std::to_string(v) + " is empty");
    }
    if (!seen.insert(strings[v]).second) {
      throw LabelingError("string " + std::to_string(v) +
                          " duplicates an earlier string");
    }
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < strings.size(); ++u) {
    for (Vertex v = 0; v < strings.size(); ++v) {
      if (u != v && min_overlap_or_zero(strings[u], strings[v]) > 0) {
        arcs.push_back({u, v});
      }
    }
  }
  return Digraph(strings.size(), std::move(arcs));
}

namespace {

void require_equal_lengths(const std::vector<String>& s_strings,
                           const std::vector<String>& t_strings) {
  std::size_t len = 0;
  bool first = true;
  for (const auto* part : {&s_strings, &t_strings}) {
    for (const String& x : *part) {
      if (first) {
        len = x.size();
        first = false;
      } else if (x.size() != len) {
        throw LabelingError("bipartite labeling strings differ in length");
      }
    }
  }
}

}  // namespace

BipartiteGraph overlap_bipartite(const std::vector<String>& s_strings,
                                 const std::vector<String>& t_strings) {
  require_equal_lengths(s_strings, t_strings);
  std::vector<Edge> edges;
  for (Vertex s = 0; s < s_strings.size(); ++s) {
    for (Vertex t = 0; t < t_strings.size(); ++t) {
      if (min_overlap_or_zero(s_strings[s], t_strings[t]) > 0) {
        edges.push_back({s, t});
      }
    }
  }
  return BipartiteGraph(s_strings.size(), t_strings.size(), std::move(edges));
}

std::string Verdict::describe() const {
  if (ok) return "OK";
  return std::string(kind == Mismatch::kMissing ? "missing" : "spurious") +
         " overlap (" + std::to_string(from) + "," + std::to_string(to) + ")";
}

Verdict verify_labeling(const Digraph& g, const DigraphLabeling& l) {
  if (l.strings.size() != g.vertex_count()) {
    throw LabelingError("labeling covers " + std::to_string(l.strings.size()) +
                        " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  const Digraph h = overlap_digraph(l.strings);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (u == v) continue;
      const bool want = g.has_arc(u, v);
      if (want != h.has_arc(u, v)) {
        return {false, want ? Mismatch::kMissing : Mismatch::kSpurious, u, v};
      }
    }
  }
  return {};
}

Verdict verify_labeling(const BipartiteGraph& g, const BipartiteLabeling& l) {
  if (l.s.size() != g.s_count() || l.t.size() != g.t_count()) {
    throw LabelingError("labeling covers " + std::to_string(l.s.size()) + "+" +
                        std::to_string(l.t.size()) + " vertices, graph has " +
                        std::to_string(g.s_count()) + "+" +
                        std::to_string(g.t_count()));
  }
  const BipartiteGraph h = overlap_bipartite(l.s, l.t);
  for (Vertex s = 0; s < g.s_count(); ++s) {
    for (Vertex t = 0; t < g.t_count(); ++t) {
      const bool want = g.has_edge(s, t);
      if (want != h.has_edge(s, t)) {
        return {false, want ? Mismatch::kMissing : Mismatch::kSpurious, s, t};
      }
    }
  }
  return {};
}

}  // namespace readability
