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

#include "readability/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace readability {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      v > std::numeric_limits<Vertex>::max()) {
    throw GraphError("line " + std::to_string(line_no) +
                     ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

// Yields (line number, tokens) for each non-blank, non-comment line.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines_of(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = split_ws(line);
    if (!toks.empty() && toks.front().front() != '#') {
      out.emplace_back(line_no, std::move(toks));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw GraphError("missing graph header");
  const auto& [hdr_no, hdr] = lines.front();
  const bool is_digraph = hdr[0] == "digraph";
  if (is_digraph ? hdr.size() != 2
                 : (hdr[0] != "bipartite" || hdr.size() != 3)) {
    throw GraphError("line " + std::to_string(hdr_no) +
                     ": malformed header, expected 'digraph <n>' or "
                     "'bipartite <nS> <nT>'");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, toks] = lines[k];
    if (toks.size() != 2) {
      throw GraphError("line " + std::to_string(no) +
                       ": expected two endpoints");
    }
    pairs.emplace_back(static_cast<Vertex>(to_uint(toks[0], no)),
                       static_cast<Vertex>(to_uint(toks[1], no)));
  }
  if (is_digraph) {
    const std::size_t n = to_uint(hdr[1], hdr_no);
    std::vector<Arc> arcs;
    for (auto [a, b] : pairs) arcs.push_back({a, b});
    Digraph g(n, std::move(arcs));
    const std::size_t dups = g.duplicates_dropped();
    return {std::move(g), dups};
  }
  const std::size_t ns = to_uint(hdr[1], hdr_no);
  const std::size_t nt = to_uint(hdr[2], hdr_no);
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  BipartiteGraph g(ns, nt, std::move(edges));
  const std::size_t dups = g.duplicates_dropped();
  return {std::move(g), dups};
}

std::string serialize_graph(const Digraph& g) {
  std::ostringstream os;
  os << "digraph " << g.vertex_count() << '\n';
  for (const Arc& a : g.arcs()) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

std::string serialize_graph(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "bipartite " << g.s_count() << ' ' << g.t_count() << '\n';
  for (const Edge& e : g.edges()) os << e.s << ' ' << e.t << '\n';
  return os.str();
}

namespace {

String parse_symbols(std::string_view tok, std::size_t no) {
  String s;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    std::size_t end = tok.find(',', pos);
    if (end == std::string_view::npos) end = tok.size();
    s.push_back(static_cast<Symbol>(to_uint(tok.substr(pos, end - pos), no)));
    if (end == tok.size()) break;
    pos = end + 1;
  }
  return s;
}

std::vector<String> densify(std::map<Vertex, String>& m, char part) {
  std::vector<String> out;
  out.reserve(m.size());
  Vertex expect = 0;
  for (auto& [idx, s] : m) {
    if (idx != expect) {
      throw GraphError(std::string("labeling has no string for ") + part +
                       " " + std::to_string(expect));
    }
    out.push_back(std::move(s));
    ++expect;
  }
  return out;
}

void append_line(std::ostringstream& os, char part, std::size_t idx,
                 const String& s) {
  os << part << ' ' << idx;
  for (std::size_t k = 0; k < s.size(); ++k) {
    os << (k == 0 ? ' ' : ',') << s[k];
  }
  os << '\n';
}

}  // namespace

AnyLabeling parse_labeling(std::string_view text) {
  std::map<Vertex, String> parts[3];  // V, S, T
  for (const auto& [no, toks] : lines_of(text)) {
    if (toks.size() < 2 || toks.size() > 3 || toks[0].size() != 1) {
      throw GraphError("line " + std::to_string(no) +
                       ": expected '<S|T|V> <index> <symbols>'");
    }
    const char part = toks[0][0];
    const int slot = part == 'V' ? 0 : part == 'S' ? 1 : part == 'T' ? 2 : -1;
    if (slot < 0) {
      throw GraphError("line " + std::to_string(no) + ": unknown part '" +
                       std::string(toks[0]) + "'");
    }
    const auto idx = static_cast<Vertex>(to_uint(toks[1], no));
    String s = toks.size() == 3 ? parse_symbols(toks[2], no) : String{};
    if (!parts[slot].emplace(idx, std::move(s)).second) {
      throw GraphError("line " + std::to_string(no) + ": duplicate entry for " +
                       part + " " + std::to_string(idx));
    }
  }
  const bool has_v = !parts[0].empty();
  const bool has_st = !parts[1].empty() || !parts[2].empty();
  if (has_v && has_st) {
    throw GraphError("labeling mixes V lines with S/T lines");
  }
  if (has_v) return DigraphLabeling{densify(parts[0], 'V')};
  return BipartiteLabeling{densify(parts[1], 'S'), densify(parts[2], 'T')};
}

std::string serialize_labeling(const DigraphLabeling& l) {
  std::ostringstream os;
  for (std::size_t v = 0; v < l.strings.size(); ++v) {
    append_line(os, 'V', v, l.strings[v]);
  }
  return os.str();
}

std::string serialize_labeling(const BipartiteLabeling& l) {
  std::ostringstream os;
  for (std::size_t v = 0; v < l.s.size(); ++v) append_line(os, 'S', v, l.s[v]);
  for (std::size_t v = 0; v < l.t.size(); ++v) append_line(os, 'T', v, l.t[v]);
  return os.str();
}

std::string render(const String& s) {
  const bool letters =
      std::all_of(s.begin(), s.end(), [](Symbol c) { return c < 26; });
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (letters) {
      out.push_back(static_cast<char>('a' + s[k]));
    } else {
      if (k > 0) out.push_back(',');
      out += std::to_string(s[k]);
    }
  }
  return out;
}

}  // namespace readability
