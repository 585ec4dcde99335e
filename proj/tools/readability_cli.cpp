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

// Command-line front end. Exit status: 0 success, 1 domain error (bad input
// file, invalid labeling, size guard), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "readability/bounds.hpp"
#include "readability/braga_meidanis.hpp"
#include "readability/graph.hpp"
#include "readability/grids.hpp"
#include "readability/ilp.hpp"
#include "readability/io.hpp"
#include "readability/oracle.hpp"
#include "readability/overlap.hpp"

namespace {

using namespace readability;
using Json = nlohmann::ordered_json;

constexpr const char* kFormats = R"(File formats:
  graph     first line 'digraph <n>' or 'bipartite <nS> <nT>', then one
            '<a> <b>' edge per line (0-based); '#' starts a comment line
  labeling  one '<S|T|V> <index> <sym,sym,...>' line per vertex; symbols
            are non-negative integers
  LP        Minimize / Subject To / Binary / End)";

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

// Ordered key/value report printed as `key: value` lines or JSON.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    json_[key] = value;
    std::ostringstream ss;
    if constexpr (std::is_same_v<T, bool>) {
      ss << (value ? "true" : "false");
    } else {
      ss << value;
    }
    lines_.emplace_back(key, ss.str());
  }
  void print(bool as_json) const {
    if (as_json) {
      std::cout << json_.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : lines_) std::cout << k << ": " << v << '\n';
  }

 private:
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

ParsedGraph load_graph(const std::string& path) {
  ParsedGraph p = parse_graph(read_file(path));
  if (p.duplicates_dropped > 0) {
    std::cerr << "warning: dropped " << p.duplicates_dropped
              << " duplicate edge(s)\n";
  }
  return p;
}

BipartiteGraph load_bipartite(const std::string& path) {
  ParsedGraph p = load_graph(path);
  if (auto* g = std::get_if<BipartiteGraph>(&p.graph)) return std::move(*g);
  throw DomainError(path + " is not a bipartite graph file");
}

Digraph load_digraph(const std::string& path) {
  ParsedGraph p = load_graph(path);
  if (auto* g = std::get_if<Digraph>(&p.graph)) return std::move(*g);
  throw DomainError(path + " is not a digraph file");
}

void check_or_throw(const Verdict& v) {
  if (!v.ok) throw DomainError("labeling failed verification: " + v.describe());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Readability of digraphs and bipartite graphs"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string graph_path;
  std::string labeling_path;
  std::string out_path;
  std::string mode;
  int r = 0;
  int r_max = 0;
  int m_dim = 0;
  int n_dim = 0;
  int threads = 1;
  bool stats = false;
  bool json = false;
  bool verify = false;
  bool no_tight = false;
  bool closure = false;

  auto* overlap_cmd = app.add_subcommand(
      "overlap-graph", "Build the overlap graph of a labeling file");
  overlap_cmd->add_option("--labeling", labeling_path, "Labeling file")
      ->required();
  overlap_cmd->add_option("--out", out_path, "Output graph file");

  auto* bm_cmd = app.add_subcommand(
      "label-bm", "Label a digraph with the matching-cover construction");
  bm_cmd->add_option("--graph", graph_path, "Digraph file")->required();
  bm_cmd->add_option("--out", out_path, "Output labeling file");
  bm_cmd->add_flag("--stats", stats, "Print length and symbol counts");
  bm_cmd->add_flag("--json", json, "Print stats as JSON");

  auto add_ilp_options = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--graph", graph_path, what)->required();
    cmd->add_option("--r", r, "Maximum string length")->required();
    cmd->add_option("--out", out_path, "Output LP file");
    cmd->add_flag("--stats", stats,
                  "Print variable and constraint counts instead of the LP");
    cmd->add_flag("--closure", closure,
                  "Add transitivity rows through repeated vertices");
    cmd->add_flag("--json", json, "Print stats as JSON");
  };
  auto* ilpb_cmd = app.add_subcommand("ilp-bipartite",
                                      "Emit the bipartite feasibility ILP");
  add_ilp_options(ilpb_cmd, "Bipartite graph file");
  ilpb_cmd->add_flag("--no-tight-rows", no_tight,
                     "Omit the rows that make z an exact run indicator");
  auto* ilpd_cmd =
      app.add_subcommand("ilp-digraph", "Emit the digraph feasibility ILP");
  add_ilp_options(ilpd_cmd, "Digraph file");

  auto* bounds_cmd =
      app.add_subcommand("bounds", "Report readability bounds of a graph");
  bounds_cmd->add_option("--graph", graph_path, "Bipartite graph file")
      ->required();
  bounds_cmd->add_flag("--json", json, "Print as JSON");

  auto* exact_cmd = app.add_subcommand(
      "exact", "Compute exact readability by exhaustive search");
  exact_cmd->add_option("--graph", graph_path, "Graph file")->required();
  exact_cmd->add_option("--r-max", r_max, "Largest length to try")->required();
  exact_cmd->add_option("--out", out_path, "Output witness labeling file");
  exact_cmd->add_option("--threads", threads, "Worker threads (bipartite)")
      ->check(CLI::PositiveNumber);
  exact_cmd->add_flag("--json", json, "Print as JSON");

  auto* grid_cmd = app.add_subcommand(
      "grid-label", "Length-3 labeling of the m x n grid (m, n >= 3)");
  grid_cmd->add_option("--m", m_dim, "Rows")->required();
  grid_cmd->add_option("--n", n_dim, "Columns")->required();
  grid_cmd->add_option("--out", out_path, "Output labeling file");
  grid_cmd->add_flag("--verify", verify, "Verify before writing");

  auto* tg_cmd = app.add_subcommand(
      "tg-label", "Length-3 labeling of the toroidal grid C_4n x C_4n");
  tg_cmd->add_option("--n", n_dim, "n >= 1")->required();
  tg_cmd->add_option("--out", out_path, "Output labeling file");
  tg_cmd->add_flag("--verify", verify, "Verify before writing");

  auto* verify_cmd =
      app.add_subcommand("verify", "Check that a labeling realizes a graph");
  verify_cmd->add_option("--graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("--labeling", labeling_path, "Labeling file")
      ->required();
  verify_cmd->add_option("--mode", mode, "bipartite or digraph")
      ->required()
      ->check(CLI::IsMember({"bipartite", "digraph"}));

  auto* decompose_cmd = app.add_subcommand(
      "decompose-tg", "Print the three edge classes of C_4n x C_4n");
  decompose_cmd->add_option("--n", n_dim, "n >= 1")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->footer(kFormats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (overlap_cmd->parsed()) {
      const AnyLabeling l = parse_labeling(read_file(labeling_path));
      if (const auto* d = std::get_if<DigraphLabeling>(&l)) {
        write_output(out_path, serialize_graph(overlap_digraph(d->strings)));
      } else {
        const auto& b = std::get<BipartiteLabeling>(l);
        write_output(out_path, serialize_graph(overlap_bipartite(b.s, b.t)));
      }
    } else if (bm_cmd->parsed()) {
      const Digraph g = load_digraph(graph_path);
      BmTrace trace;
      const DigraphLabeling l = bm_label(g, &trace);
      check_or_throw(verify_labeling(g, l));
      if (stats) {
        const DegreePair d = max_degrees(g);
        const std::size_t p = std::max(d.out, d.in);
        Report rep;
        rep.add("p", p);
        rep.add("length", l.length());
        rep.add("length_bound", (std::size_t{1} << (p + 1)) - 1);
        rep.add("symbols", trace.symbols_used);
        rep.print(json);
        if (!out_path.empty()) write_output(out_path, serialize_labeling(l));
      } else {
        write_output(out_path, serialize_labeling(l));
      }
    } else if (ilpb_cmd->parsed() || ilpd_cmd->parsed()) {
      const ModelOptions opts{!no_tight, closure};
      if (r < 1) throw DomainError("--r must be at least 1");
      ModelCounts c;
      std::string lp;
      if (ilpb_cmd->parsed()) {
        const BipartiteGraph g = load_bipartite(graph_path);
        if (stats) {
          c = bipartite_model_counts(g.s_count(), g.t_count(), g.edge_count(),
                                     r, opts);
        } else {
          std::ostringstream os;
          write_lp(g, r, opts, os);
          lp = os.str();
        }
      } else {
        const Digraph g = load_digraph(graph_path);
        if (stats) {
          c = digraph_model_counts(g.vertex_count(), g.arc_count(), r, opts);
        } else {
          std::ostringstream os;
          write_lp(g, r, opts, os);
          lp = os.str();
        }
      }
      if (stats) {
        Report rep;
        rep.add("variables", c.variables);
        rep.add("constraints", c.constraints);
        rep.print(json);
      } else {
        write_output(out_path, lp);
      }
    } else if (bounds_cmd->parsed()) {
      const BoundsReport b = bounds_report(load_bipartite(graph_path));
      if (!json) {
        std::cout << format_report(b);
      } else {
        Json j = Json::object();
        const auto opt = [](const auto& v) {
          return v ? Json(*v) : Json(nullptr);
        };
        j["distinctness"] = opt(b.distinctness);
        j["distinctness_lower"] = opt(b.distinctness_lower);
        j["hub"] = opt(b.hub);
        j["hub_lower"] = b.hub_lower;
        j["hub_upper"] = b.hub_upper;
        j["readability1"] = b.readability1;
        j["readability2"] = opt(b.readability2);
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        std::cout << j.dump(2) << '\n';
      }
    } else if (exact_cmd->parsed()) {
      const ParsedGraph p = load_graph(graph_path);
      OracleOptions opts;
      opts.threads = threads;
      Report rep;
      std::string witness;
      bool tripped = false;
      if (const auto* g = std::get_if<BipartiteGraph>(&p.graph)) {
        const auto res = exact_readability_bipartite(*g, r_max, opts);
        tripped = res.guard_tripped;
        rep.add("readability", res.readability ? std::to_string(*res.readability)
                                               : std::string("unknown"));
        rep.add("refuted_below", res.refuted_below);
        if (res.readability) witness = serialize_labeling(res.witness);
      } else {
        const auto& d = std::get<Digraph>(p.graph);
        const auto res = exact_readability_digraph(d, r_max, opts);
        tripped = res.guard_tripped;
        rep.add("readability", res.readability ? std::to_string(*res.readability)
                                               : std::string("unknown"));
        rep.add("refuted_below", res.refuted_below);
        if (res.readability) witness = serialize_labeling(res.witness);
      }
      rep.add("guard_tripped", tripped);
      rep.print(json);
      if (tripped) {
        std::cerr << "error: search exceeds the position guard ("
                  << (std::holds_alternative<BipartiteGraph>(p.graph)
                          ? kBipartitePositionGuard
                          : kDigraphPositionGuard)
                  << " positions)\n";
        return 1;
      }
      if (!out_path.empty() && !witness.empty()) {
        write_output(out_path, witness);
      }
    } else if (grid_cmd->parsed()) {
      const BipartiteLabeling l = grid_label(m_dim, n_dim);
      if (verify) check_or_throw(verify_labeling(grid_graph(m_dim, n_dim).graph, l));
      write_output(out_path, serialize_labeling(l));
    } else if (tg_cmd->parsed()) {
      const BipartiteLabeling l = tg_label(n_dim);
      if (verify) check_or_throw(verify_labeling(tg(n_dim).graph, l));
      write_output(out_path, serialize_labeling(l));
    } else if (verify_cmd->parsed()) {
      const ParsedGraph p = load_graph(graph_path);
      const AnyLabeling l = parse_labeling(read_file(labeling_path));
      Verdict v;
      if (mode == "bipartite") {
        const auto* g = std::get_if<BipartiteGraph>(&p.graph);
        const auto* b = std::get_if<BipartiteLabeling>(&l);
        if (g == nullptr || b == nullptr) {
          throw DomainError("bipartite mode needs a bipartite graph and S/T "
                            "labeling lines");
        }
        v = verify_labeling(*g, *b);
      } else {
        const auto* g = std::get_if<Digraph>(&p.graph);
        const auto* d = std::get_if<DigraphLabeling>(&l);
        if (g == nullptr || d == nullptr) {
          throw DomainError("digraph mode needs a digraph and V labeling "
                            "lines");
        }
        v = verify_labeling(*g, *d);
      }
      std::cout << v.describe() << '\n';
      return v.ok ? 0 : 1;
    } else if (decompose_cmd->parsed()) {
      const GridGraph g = tg(n_dim);
      const TgDecomposition d = tg_decompose(n_dim);
      std::ostringstream os;
      os << "g1: " << d.g1.size() << "\ng2: " << d.g2.size()
         << "\ng3: " << d.g3.size() << '\n';
      for (std::size_t k = 0; k < g.graph.edge_count(); ++k) {
        const Edge& e = g.graph.edges()[k];
        const GridCoord a = g.s_coords[e.s];
        const GridCoord b = g.t_coords[e.t];
        os << '(' << a.i << ',' << a.j << ") (" << b.i << ',' << b.j << ") "
           << d.colors.colors[k] << '\n';
      }
      std::cout << os.str();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
