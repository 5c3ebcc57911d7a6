// Copyright 2026 The sdim Authors
//
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

#include "sdim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sdim/error.hpp"
#include "sdim/graph_io.hpp"
#include "sdim/jahangir.hpp"
#include "sdim/strong_metric.hpp"
#include "sdim/verify.hpp"

namespace sdim::cli {

namespace {

struct GraphInput {
  Graph graph;
  std::optional<JahangirMatch> jahangir;
};

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::kInvalidArgument, "bad " + what + ": '" + text + "'");
  }
  return value;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  const int value = parse_int(text, what);
  if (value < 0) throw Error(ErrorKind::kInvalidParameter, what + " must be >= 0");
  return static_cast<std::size_t>(value);
}

Graph generate(const std::string& kind, int n, int m) {
  if (kind == "jahangir") return build_jahangir({n, m}).graph;
  if (n < 1) throw Error(ErrorKind::kInvalidParameter, kind + " needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  if (kind == "cycle") return make_cycle(size);
  if (kind == "path") return make_path(size);
  if (kind == "complete") return make_complete(size);
  throw Error(ErrorKind::kInvalidArgument, "unknown graph kind '" + kind + "'");
}

JahangirMatch identity_match(JahangirParams p) {
  JahangirMatch match{p, {}};
  for (Vertex v = 0; v < static_cast<Vertex>(p.order()); ++v) match.to_input.push_back(v);
  return match;
}

// A file path, "-" for standard input, or an inline "kind:params" shorthand
// such as "jahangir:6,5" or "cycle:4".
GraphInput load_graph(const std::string& spec, std::istream& in) {
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "jahangir") {
      const auto comma = rest.find(',');
      if (comma == std::string::npos) {
        throw Error(ErrorKind::kInvalidArgument, "expected jahangir:n,m, got '" + spec + "'");
      }
      const JahangirParams p{parse_int(rest.substr(0, comma), "n"),
                             parse_int(rest.substr(comma + 1), "m")};
      return {build_jahangir(p).graph, identity_match(p)};
    }
    if (kind == "cycle" || kind == "path" || kind == "complete") {
      return {generate(kind, parse_int(rest, "n"), 0), std::nullopt};
    }
  }
  std::string text;
  if (spec == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(spec);
    if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot read '" + spec + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  Graph g = parse(text, GraphFormat::kEdgeJson);
  auto match = recognize_jahangir(g);
  return {std::move(g), std::move(match)};
}

GraphFormat format_from(const std::string& name) {
  if (auto f = parse_graph_format(name)) return *f;
  throw Error(ErrorKind::kInvalidArgument, "unknown format '" + name + "'");
}

std::string set_text(const Graph& g, const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += g.name(set[i]);
  }
  return out + "}";
}

void print_sdim(std::ostream& out, const Graph& g, std::size_t size, const std::string& method,
                const std::optional<VertexSet>& basis) {
  out << "sdim = " << size << "\n";
  out << "method = " << method << "\n";
  if (basis) out << "basis = " << set_text(g, *basis) << "\n";
}

int cmd_sdim(const GraphInput& input, const std::string& method, std::size_t brute_cap,
             CoverSolverOptions cover, std::ostream& out, std::ostream& err) {
  const Graph& g = input.graph;
  require_connected(g, "sdim");

  std::optional<int> formula;
  if (input.jahangir) formula = sdim_formula(input.jahangir->params);

  auto formula_basis = [&]() -> std::optional<VertexSet> {
    const JahangirParams p = input.jahangir->params;
    const JahangirLabeling lab(p);
    std::vector<int> indices;
    switch (classify(p)) {
      case JahangirRegime::kEvenMain: indices = predicted_cover_even(p); break;
      case JahangirRegime::kOddMain: indices = predicted_cover_odd(p); break;
      default: return std::nullopt;
    }
    VertexSet basis;
    for (Vertex v : to_vertex_set(lab, indices)) basis.push_back(input.jahangir->to_input[v]);
    std::sort(basis.begin(), basis.end());
    return basis;
  };

  if (method == "brute") {
    const StrongBasisResult r = brute_force_sdim(g, brute_cap);
    print_sdim(out, g, r.size, std::string(to_string(r.method)), r.basis);
    return kExitOk;
  }
  if (method == "pipeline") {
    const StrongBasisResult r = sdim_via_cover(g, cover);
    print_sdim(out, g, r.size, std::string(to_string(r.method)), r.basis);
    return kExitOk;
  }
  if (method == "formula") {
    if (!formula) {
      err << "error: no closed form covers this graph\n";
      return kExitUsage;
    }
    print_sdim(out, g, static_cast<std::size_t>(*formula), "formula", formula_basis());
    return kExitOk;
  }

  // auto
  if (!formula) {
    const StrongBasisResult r = sdim_via_cover(g, cover);
    print_sdim(out, g, r.size, std::string(to_string(r.method)), r.basis);
    return kExitOk;
  }
  if (g.order() > cover.vertex_cap) {
    print_sdim(out, g, static_cast<std::size_t>(*formula),
               "formula (not cross-checked: order exceeds cover cap)", formula_basis());
    return kExitOk;
  }
  const StrongBasisResult r = sdim_via_cover(g, cover);
  if (r.size != static_cast<std::size_t>(*formula)) {
    err << "error: formula gives " << *formula << " but the pipeline gives " << r.size << "\n";
    return kExitMismatch;
  }
  print_sdim(out, g, r.size, "formula, cross-checked by vertex-cover-reduction", r.basis);
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (lo > hi) throw Error(ErrorKind::kInvalidArgument, "empty range '" + text + "'");
  return {lo, hi};
}

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong metric dimension toolkit", "sdim"};
  app.require_subcommand(1);

  std::string graph_spec;
  std::string format = "edge-json";
  std::string brute_cap = std::to_string(kDefaultBruteForceCap);
  std::string cover_cap = std::to_string(CoverSolverOptions{}.vertex_cap);

  std::string gen_kind;
  std::string gen_n;
  std::string gen_m;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", gen_kind, "jahangir | cycle | path | complete")->required();
  gen->add_option("-n", gen_n, "Spoke spacing (jahangir) or vertex count");
  gen->add_option("-m", gen_m, "Spoke count (jahangir)");
  gen->add_option("--format", format, "edge-json | dot");

  std::string method = "auto";
  auto* sdim = app.add_subcommand("sdim", "Strong metric dimension of a graph");
  sdim->add_option("graph", graph_spec, "Graph file, '-', or jahangir:n,m")->required();
  sdim->add_option("--method", method, "auto | formula | pipeline | brute");
  sdim->add_option("--brute-cap", brute_cap, "Largest order for brute force");
  sdim->add_option("--cover-cap", cover_cap, "Largest order for the exact cover solver");

  auto* srg = app.add_subcommand("srg", "Strong resolving graph");
  srg->add_option("graph", graph_spec, "Graph file, '-', or jahangir:n,m")->required();
  srg->add_option("--format", format, "edge-json | dot");

  auto* mmd = app.add_subcommand("mmd", "Mutually maximally distant pairs");
  mmd->add_option("graph", graph_spec, "Graph file, '-', or jahangir:n,m")->required();

  std::string mode = "exact";
  bool of_srg = false;
  auto* cover = app.add_subcommand("cover", "Vertex cover of a graph");
  cover->add_option("graph", graph_spec, "Graph file, '-', or jahangir:n,m")->required();
  cover->add_option("--mode", mode, "exact | greedy");
  cover->add_flag("--srg", of_srg, "Cover the strong resolving graph of the input");
  cover->add_option("--cover-cap", cover_cap, "Largest order for the exact cover solver");

  std::string n_range = "5..12";
  std::string m_range = "4..8";
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Check the Jahangir closed forms on a grid");
  verify->add_option("--n", n_range, "Range of n, a..b");
  verify->add_option("--m", m_range, "Range of m, a..b");
  verify->add_option("--brute-cap", brute_cap, "Largest order for the brute-force cross-check");
  verify->add_option("--cover-cap", cover_cap, "Largest order for the exact cover solver");
  verify->add_flag("--json", as_json, "Emit JSON instead of a table");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CoverSolverOptions solver;
    solver.vertex_cap = parse_size(cover_cap, "--cover-cap");
    const std::size_t brute = parse_size(brute_cap, "--brute-cap");

    if (*gen) {
      if (gen_n.empty()) throw Error(ErrorKind::kInvalidArgument, "gen needs -n");
      const int n = parse_int(gen_n, "-n");
      int m = 0;
      if (gen_kind == "jahangir") {
        if (gen_m.empty()) throw Error(ErrorKind::kInvalidArgument, "gen jahangir needs -m");
        m = parse_int(gen_m, "-m");
      }
      const GraphFormat f = format_from(format);
      out << serialize(generate(gen_kind, n, m), f);
      if (f == GraphFormat::kEdgeJson) out << "\n";
      return kExitOk;
    }
    if (*sdim) {
      if (method != "auto" && method != "formula" && method != "pipeline" && method != "brute") {
        throw Error(ErrorKind::kInvalidArgument, "unknown method '" + method + "'");
      }
      return cmd_sdim(load_graph(graph_spec, in), method, brute, solver, out, err);
    }
    if (*srg) {
      const GraphFormat f = format_from(format);
      const GraphInput input = load_graph(graph_spec, in);
      out << serialize(strong_resolving_graph(input.graph), f);
      if (f == GraphFormat::kEdgeJson) out << "\n";
      return kExitOk;
    }
    if (*mmd) {
      const GraphInput input = load_graph(graph_spec, in);
      for (const Edge& e : mmd_pairs(input.graph).pairs) {
        out << input.graph.name(e.first) << " " << input.graph.name(e.second) << "\n";
      }
      return kExitOk;
    }
    if (*cover) {
      if (mode != "exact" && mode != "greedy") {
        throw Error(ErrorKind::kInvalidArgument, "unknown mode '" + mode + "'");
      }
      const GraphInput input = load_graph(graph_spec, in);
      const Graph target = of_srg ? strong_resolving_graph(input.graph) : input.graph;
      const CoverResult r =
          mode == "exact" ? exact_min_vertex_cover(target, solver) : greedy_cover(target);
      out << "size = " << r.size << "\n";
      out << "optimal = " << (r.optimal ? "true" : "false") << "\n";
      out << "cover = " << set_text(target, r.cover) << "\n";
      if (mode == "exact") out << "nodes = " << r.nodes_explored << "\n";
      return kExitOk;
    }
    if (*verify) {
      const auto [n_lo, n_hi] = parse_range(n_range);
      const auto [m_lo, m_hi] = parse_range(m_range);
      VerifyOptions options;
      options.brute_cap = brute;
      options.cover = solver;
      const auto reports = verify_grid(n_lo, n_hi, m_lo, m_hi, options);
      out << (as_json ? reports_json(reports) : reports_table(reports));
      const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                        [](const VerificationReport& r) { return r.passed(); });
      return all_pass ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitUsage : kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace sdim::cli
