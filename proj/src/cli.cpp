// Copyright 2026 The densub Authors
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

#include "densub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "densub/cnf.hpp"
#include "densub/dimacs.hpp"
#include "densub/documents.hpp"
#include "densub/errors.hpp"
#include "densub/oracle.hpp"
#include "densub/parity_reduction.hpp"
#include "densub/solvers.hpp"
#include "densub/tree_decomposition.hpp"
#include "densub/tw_reduction.hpp"

namespace densub {
namespace {


std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Assignment parse_assignment(std::string_view text, std::size_t num_vars) {
  Assignment a(num_vars, false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok == "c") continue;
    if (tok != "v") tokens = std::istringstream(line);
    while (tokens >> tok) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "malformed literal '" + tok + "'");
      }
      if (lit == 0) continue;
      const unsigned long long var = lit < 0 ? -static_cast<unsigned long long>(lit) : lit;
      if (var > num_vars) throw ParseError(line_no, "variable " + std::to_string(var) + " out of range");
      a[var - 1] = lit > 0;
    }
  }
  return a;
}

SolveLimits limits_from(std::size_t max_vertices, std::uint64_t max_subsets, double seconds) {
  SolveLimits limits;
  limits.max_vertices = max_vertices;
  limits.max_subsets = max_subsets;
  limits.time_budget = std::chrono::duration<double>(seconds);
  return limits;
}

/// Re-verifies a witness against the graph and prints "p/q" plus the model.
void emit_solution(const Graph& g, const Solution& s, std::ostream& out) {
  const MinorSummary check = verify_model(g, s.model);
  if (check.density != s.summary.density) throw Error("witness does not re-verify to the reported density");
  out << check.density.str() << '\n' << emit_model_document(s.model);
}

Rational parse_target(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw Error("malformed target '" + text + "': " + e.what());
  }
}

template <class F>
int with_budget(F&& run, const Graph& g, std::ostream& out, std::ostream& err) {
  try {
    return run();
  } catch (const BudgetExceeded<Solution>& e) {
    err << "error: " << e.what() << '\n';
    if (e.has_best()) emit_solution(g, e.best(), out);
    return kExitBudget;
  } catch (const SearchBudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  }
}


void check_rebuild(const LabeledGraphDocument& doc, const Graph& g, const std::map<VertexId, std::string>& prov) {
  if (!(doc.graph == g) || doc.provenance != prov) {
    throw Error("graph does not match the reduction of its embedded formula");
  }
}

TwReduction rebuild_tw(const LabeledGraphDocument& doc) {
  if (doc.meta("kind") != "treewidth") throw Error("not a treewidth reduction document");
  const CnfFormula f = embedded_formula(doc);
  TwReduction red = build_tw_reduction(f, std::stoull(doc.meta("vars")));
  check_rebuild(doc, red.graph, red.provenance);
  return red;
}

int cmd_reduce(std::optional<std::size_t> parity_r, bool treewidth, const std::string& input, std::istream& in,
               std::ostream& out) {
  const CnfFormula f = parse_dimacs_cnf(read_source(input, in));
  if (treewidth) {
    out << emit_graph_document(to_document(build_tw_reduction(pad_formula(f), f.num_vars)));
    return kExitYes;
  }
  const bool has_negation = std::any_of(f.clauses.begin(), f.clauses.end(), [](const auto& c) {
    return std::any_of(c.begin(), c.end(), [](const Literal& l) { return l.negated; });
  });
  Positive1in3Formula phi = has_negation ? eliminate_negations(f).formula : as_positive_1in3(f);
  phi = ensure_min_frequency(phi);
  out << emit_graph_document(to_document(build_parity_reduction(phi, *parity_r)));
  return kExitYes;
}

int cmd_certify(const std::string& graph_path, const std::string& assignment_path, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const LabeledGraphDocument doc = load_graph_document(read_source(graph_path, in));
  const CnfFormula f = embedded_formula(doc);
  const Assignment a = parse_assignment(read_source(assignment_path, in), f.num_vars);
  const Rational target = parse_target(doc.meta("target"));

  TopoMinorModel model;
  const std::string& kind = doc.meta("kind");
  if (kind == "parity") {
    const Positive1in3Formula phi = as_positive_1in3(f);
    const ReductionOutput red = build_parity_reduction(phi, std::stoull(doc.meta("r")));
    check_rebuild(doc, red.graph, red.provenance);
    if (!check_1in3(phi, a)) {
      err << "assignment is not 1-in-3 satisfying\n";
      return kExitNo;
    }
    model = assignment_to_model(red, a);
  } else if (kind == "treewidth") {
    const TwReduction red = rebuild_tw(doc);
    if (!satisfies(red.source, a)) {
      err << "assignment does not satisfy the formula\n";
      return kExitNo;
    }
    model = tw_assignment_to_model(red, a);
  } else {
    throw Error("unknown reduction kind '" + kind + "'");
  }
  const MinorSummary summary = verify_model(doc.graph, model);
  const bool ok = summary.density == target;
  out << summary.density.str() << (ok ? " = " : " != ") << target.str() << (ok ? " OK" : " MISMATCH") << '\n';
  out << emit_model_document(model);
  return ok ? kExitYes : kExitNo;
}

int cmd_bipartite(const std::string& graph_path, const std::string& target_text, std::istream& in,
                  std::ostream& out, const SolveLimits& limits) {
  const Graph g = load_graph_document(read_source(graph_path, in)).graph;
  std::vector<VertexId> xs;
  std::vector<VertexId> ys;
  for (VertexId v : g.vertices()) {
    const auto role = g.role(v);
    if (role == Role::side_x) {
      xs.push_back(v);
    } else if (role == Role::side_y) {
      ys.push_back(v);
    } else {
      throw Error("vertex " + to_string(v) + " has neither role side-x nor side-y");
    }
  }
  const Rational target = parse_target(target_text);
  const BipartiteSubdivision r = dense_bipartite_subdivision(xs, ys, g.edges(), target, limits);
  out << (r.feasible ? "yes " : "no ") << r.best_ratio.str() << '\n';
  if (!r.feasible) return kExitNo;
  TopoMinorModel model;
  model.mode = DepthMode::subdivision(1);
  model.nails = r.y_prime;
  for (const auto& [x, pair] : r.assignment) model.paths.push_back({pair.a, x, pair.b});
  verify_model(g, model);
  out << emit_model_document(model);
  return kExitYes;
}

int cmd_gen(std::size_t vars, std::size_t clauses, std::uint64_t seed, std::ostream& out) {
  if (vars < 3) throw Error("need at least three variables");
  if (clauses < vars) throw Error("need at least as many clauses as variables");
  std::mt19937_64 rng(seed);
  // Planted assignment with at least one true and two false variables.
  Assignment planted(vars, false);
  std::vector<std::uint32_t> order(vars);
  for (std::uint32_t v = 0; v < vars; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t trues = 1 + rng() % (vars - 2);
  for (std::size_t i = 0; i < trues; ++i) planted[order[i]] = true;
  std::vector<std::uint32_t> yes;
  std::vector<std::uint32_t> no;
  for (std::uint32_t v = 0; v < vars; ++v) (planted[v] ? yes : no).push_back(v);

  CnfFormula f;
  f.num_vars = vars;
  for (std::size_t i = 0; i < clauses; ++i) {
    // The first clauses cover every variable once.
    const auto must = static_cast<std::uint32_t>(i < vars ? order[i] : rng() % vars);
    const std::uint32_t t = planted[must] ? must : yes[rng() % yes.size()];
    std::uint32_t f1 = planted[must] ? no[rng() % no.size()] : must;
    std::uint32_t f2 = no[rng() % no.size()];
    while (f2 == f1) f2 = no[rng() % no.size()];
    std::vector<Literal> c{{t, false}, {f1, false}, {f2, false}};
    std::shuffle(c.begin(), c.end(), rng);
    f.clauses.push_back(std::move(c));
  }
  out << "c planted";
  for (std::uint32_t v = 0; v < vars; ++v) out << ' ' << (planted[v] ? "" : "-") << (v + 1);
  out << " 0\n" << emit_dimacs_cnf(f);
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense shallow topological minors: solvers, reductions and certificates", "densub"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string input_path;
  std::size_t max_vertices = 64;
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
  double time_budget = 600.0;
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", max_vertices, "Largest graph or candidate pool the search accepts");
    sub->add_option("--max-subsets", max_subsets, "Largest number of subsets enumerated");
    sub->add_option("--time-budget", time_budget, "Wall-clock budget in seconds");
  };

  auto* reduce = app.add_subcommand("reduce", "Build a reduction graph from a DIMACS CNF formula");
  std::optional<std::size_t> parity_r;
  bool treewidth = false;
  reduce->add_option("--input", input_path, "DIMACS file (default: stdin)");
  auto* parity_opt = reduce->add_option("--parity-r", parity_r, "Depth r of the parity construction")
                         ->check(CLI::PositiveNumber);
  auto* tw_opt = reduce->add_flag("--treewidth", treewidth, "Bounded-treewidth construction");
  parity_opt->excludes(tw_opt);

  auto* solve = app.add_subcommand("solve", "Densest depth-1 minor or densest subgraph");
  std::string mode = "stm-half";
  std::string nail_filter;
  std::string target;
  solve->add_option("--graph", graph_path, "Graph document (default: stdin)");
  solve->add_option("--mode", mode, "sd1, stm-half or subgraph")
      ->check(CLI::IsMember({"sd1", "stm-half", "subgraph"}));
  solve->add_option("--nail-filter", nail_filter, "Restrict nail candidates, e.g. mindeg=3");
  solve->add_option("--target", target, "Answer yes (exit 0) iff the density reaches p/q");
  add_limits(solve);

  auto* certify = app.add_subcommand("certify", "Check the forward model of an assignment");
  std::string assignment_path;
  certify->add_option("--graph", graph_path, "Reduction document")->required();
  certify->add_option("--assignment", assignment_path, "Assignment, e.g. 'v 1 -2 3 0'")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force densest minor on a small graph");
  std::size_t depth = 1;
  std::string oracle_mode = "shallow";
  oracle->add_option("--graph", graph_path, "Graph document (default: stdin)");
  oracle->add_option("--depth", depth, "Subdivision depth r");
  oracle->add_option("--mode", oracle_mode, "subdivision or shallow")
      ->check(CLI::IsMember({"subdivision", "shallow"}));
  add_limits(oracle);

  auto* treedecomp = app.add_subcommand("treedecomp", "Tree decomposition of a treewidth reduction");
  std::string check_path;
  treedecomp->add_option("--graph", graph_path, "Treewidth reduction document (default: stdin)");
  treedecomp->add_option("--check", check_path, "Verify this decomposition instead of building one");

  auto* bipartite = app.add_subcommand("bipartite-sd", "Dense Bipartite Subdivision");
  bipartite->add_option("--graph", graph_path, "Graph with side-x / side-y roles (default: stdin)");
  bipartite->add_option("--target", target, "Ratio |X'|/|Y'| to reach")->required();
  add_limits(bipartite);

  auto* gen = app.add_subcommand("gen", "Planted Positive 1-in-3SAT instance as DIMACS");
  std::size_t gen_vars = 6;
  std::size_t gen_clauses = 6;
  std::uint64_t seed = 1;
  gen->add_option("--vars", gen_vars, "Variable count")->required();
  gen->add_option("--clauses", gen_clauses, "Clause count")->required();
  gen->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  if (reduce->parsed() && parity_r.has_value() == treewidth) {
    err << "error: reduce needs exactly one of --parity-r and --treewidth\n" << reduce->help();
    return kExitUsage;
  }

  const SolveLimits limits = limits_from(max_vertices, max_subsets, time_budget);
  try {
    if (reduce->parsed()) return cmd_reduce(parity_r, treewidth, input_path, in, out);
    if (certify->parsed()) return cmd_certify(graph_path, assignment_path, in, out, err);
    if (gen->parsed()) return cmd_gen(gen_vars, gen_clauses, seed, out);
    if (bipartite->parsed()) {
      try {
        return cmd_bipartite(graph_path, target, in, out, limits);
      } catch (const SearchBudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
      }
    }

    const LabeledGraphDocument doc = load_graph_document(read_source(graph_path, in));
    const Graph& g = doc.graph;
    if (treedecomp->parsed()) {
      const TwReduction red = rebuild_tw(doc);
      if (!check_path.empty()) {
        const TreeDecomposition t = load_tree_decomposition(read_source(check_path, in));
        try {
          out << "width " << verify_tree_decomposition(g, t) << '\n';
        } catch (const GraphError& e) {
          err << "invalid decomposition: " << e.what() << '\n';
          return kExitNo;
        }
        return kExitYes;
      }
      const TreeDecomposition t = cop_tree_decomposition(red);
      out << "width " << verify_tree_decomposition(g, t) << '\n' << emit_tree_decomposition(t);
      return kExitYes;
    }
    if (oracle->parsed()) {
      const DepthMode dm = oracle_mode == "shallow" ? DepthMode::shallow(depth) : DepthMode::subdivision(depth);
      return with_budget([&] {
        emit_solution(g, brute_force_densest(g, dm, limits), out);
        return kExitYes;
      }, g, out, err);
    }
    // solve
    std::optional<Rational> goal;
    if (!target.empty()) goal = parse_target(target);
    auto decide = [&](const Rational& d) { return !goal || d >= *goal ? kExitYes : kExitNo; };
    if (mode == "subgraph") {
      const DenseSubgraph ds = densest_subgraph(g);
      TopoMinorModel model;
      model.mode = DepthMode::subdivision(0);
      model.nails = ds.vertices;
      for (const Edge& e : ds.subgraph.edges()) model.paths.push_back({e.u, e.v});
      emit_solution(g, Solution{verify_model(g, model), model}, out);
      return decide(ds.density);
    }
    NailFilter filter;
    if (!nail_filter.empty()) {
      const std::string prefix = "mindeg=";
      if (nail_filter.rfind(prefix, 0) != 0) throw Error("unknown nail filter '" + nail_filter + "'");
      std::size_t k = 0;
      try {
        k = std::stoull(nail_filter.substr(prefix.size()));
      } catch (const std::exception&) {
        throw Error("malformed nail filter '" + nail_filter + "'");
      }
      filter = min_degree_filter(k);
    }
    const Depth1Mode dm = mode == "sd1" ? Depth1Mode::subdivision : Depth1Mode::shallow;
    return with_budget([&] {
      const Solution s = densest_depth1_exact(g, dm, filter, limits);
      emit_solution(g, s, out);
      return decide(s.summary.density);
    }, g, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace densub
