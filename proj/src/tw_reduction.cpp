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

#include "densub/tw_reduction.hpp"

#include <algorithm>
#include <set>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::string grid_name(std::size_t row, std::size_t col) {
  return "R[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

}  // namespace

std::size_t TwReduction::row_of(std::size_t var, std::size_t col) const {
  return (var + col * (var / side)) % side;
}

VertexId TwReduction::sequence_vertex(std::size_t var, std::size_t col) const {
  return grid[row_of(var, col)][col - 1];
}

std::size_t TwReduction::cyclic_column(std::size_t col, int step) const {
  if (step < 0) return col == 1 ? m : col - 1;
  return col == m ? 1 : col + 1;
}

std::vector<VertexId> biclique_euler_tour(std::span<const VertexId> a, std::span<const VertexId> b) {
  const std::size_t s = a.size();
  if (s == 0 || b.size() != s || s % 2 != 0) {
    throw FormulaError("biclique Euler tour needs two equal sides of even size");
  }
  // Node ids: 0..s-1 for A, s..2s-1 for B.
  std::vector<std::vector<bool>> used(s, std::vector<bool>(s, false));
  std::vector<std::size_t> next(2 * s, 0);
  std::vector<std::size_t> stack{s - 1};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    std::size_t& i = next[v];
    bool moved = false;
    while (i < s) {
      const std::size_t w = i++;
      const std::size_t ai = v < s ? v : w;
      const std::size_t bi = v < s ? w : v - s;
      if (used[ai][bi]) continue;
      used[ai][bi] = true;
      stack.push_back(v < s ? s + w : w);
      moved = true;
      break;
    }
    if (!moved) {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<VertexId> tour;
  tour.reserve(circuit.size());
  for (std::size_t v : circuit) tour.push_back(v < s ? a[v] : b[v - s]);
  return tour;
}

TwReduction build_tw_reduction(const CnfFormula& f, std::size_t actual_vars) {
  f.validate();
  std::size_t side = 0;
  while (side * side < f.num_vars) ++side;
  if (side * side != f.num_vars || side == 0 || side % 2 != 0) {
    throw FormulaError("variable count " + std::to_string(f.num_vars) +
                       " is not the square of an even integer; pad the formula first");
  }
  if (actual_vars > f.num_vars) throw FormulaError("more actual variables than padded ones");

  TwReduction red;
  red.n = f.num_vars;
  red.m = f.clauses.size();
  red.side = side;
  red.actual_vars = actual_vars;
  red.rho = Rational(4 * static_cast<std::int64_t>(side), 3);
  red.source = f;
  const std::size_t n = red.n;
  const std::size_t m = red.m;

  GraphBuilder b;
  auto named = [&](Role role, std::string name) {
    VertexId v = b.add_vertex(role);
    red.provenance[v] = std::move(name);
    return v;
  };

  red.grid.assign(side, std::vector<VertexId>(m));
  for (std::size_t col = 1; col <= m; ++col) {
    for (std::size_t row = 0; row < side; ++row) red.grid[row][col - 1] = named(Role::grid, grid_name(row, col));
  }
  red.clauses.resize(m);
  for (std::size_t i = 1; i <= m; ++i) {
    ClauseGadget& cg = red.clauses[i - 1];
    for (std::size_t j = 1; j <= side; ++j) {
      cg.a.push_back(named(Role::clique_a, "A" + std::to_string(i) + "[" + std::to_string(j) + "]"));
    }
    for (std::size_t k = 1; k <= side; ++k) {
      cg.b.push_back(named(Role::clique_b, "B" + std::to_string(i) + "[" + std::to_string(k) + "]"));
    }
  }

  auto add_gadget = [&](const std::array<VertexId, 3>& attached, const std::string& name) {
    DecisionGadget g;
    g.attached = attached;
    g.left = named(Role::decision_left, name + ".L");
    g.center = named(Role::decision_center, name + ".C");
    g.right = named(Role::decision_right, name + ".R");
    b.add_edge(g.left, g.center);
    b.add_edge(g.center, g.right);
    b.add_edge(g.left, attached[0]);
    b.add_edge(g.center, attached[1]);
    b.add_edge(g.right, attached[2]);
    return g;
  };

  red.variable_gadgets.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t col = 1; col <= m; ++col) {
      std::array<VertexId, 3> attached{red.sequence_vertex(l, red.cyclic_column(col, -1)),
                                       red.sequence_vertex(l, col),
                                       red.sequence_vertex(l, red.cyclic_column(col, +1))};
      red.variable_gadgets[l].push_back(
          add_gadget(attached, "D[x" + std::to_string(l + 1) + "," + std::to_string(col) + "]"));
    }
  }

  for (std::size_t i = 1; i <= m; ++i) {
    ClauseGadget& cg = red.clauses[i - 1];
    const std::string cname = "C" + std::to_string(i);
    cg.tour = biclique_euler_tour(cg.a, cg.b);
    for (std::size_t p = 0; p + 2 < cg.tour.size(); ++p) {
      cg.chain.push_back(add_gadget({cg.tour[p], cg.tour[p + 1], cg.tour[p + 2]},
                                    cname + ".chain" + std::to_string(p)));
    }

    // Latin-square pairing: each grid vertex of column i meets distinct
    // A- and B-vertices.
    cg.pair_of_variable.resize(n);
    cg.tour_position.resize(n);
    cg.connectors.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t block = l / side;
      const std::size_t j = block;
      const std::size_t k = (red.row_of(l, i) + block) % side;
      cg.pair_of_variable[l] = {j, k};
      const Edge want = Edge::of(cg.a[j], cg.b[k]);
      for (std::size_t e = 0; e + 1 < cg.tour.size(); ++e) {
        if (Edge::of(cg.tour[e], cg.tour[e + 1]) == want) cg.tour_position[l] = e;
      }
      const VertexId x = red.sequence_vertex(l, i);
      const std::string tag = cname + ".x" + std::to_string(l + 1);
      Connector& conn = cg.connectors[l];
      conn.to_a = {named(Role::connector, tag + ".a1"), named(Role::connector, tag + ".a2")};
      conn.to_b = {named(Role::connector, tag + ".b1"), named(Role::connector, tag + ".b2")};
      b.add_edge(x, conn.to_a[0]);
      b.add_edge(conn.to_a[0], conn.to_a[1]);
      b.add_edge(conn.to_a[1], cg.a[j]);
      b.add_edge(x, conn.to_b[0]);
      b.add_edge(conn.to_b[0], conn.to_b[1]);
      b.add_edge(conn.to_b[1], cg.b[k]);
    }

    std::set<Literal> literals(f.clauses[i - 1].begin(), f.clauses[i - 1].end());
    for (const Literal& lit : literals) {
      const DecisionGadget& g = red.variable_gadgets[lit.var][i - 1];
      auto [j, k] = cg.pair_of_variable[lit.var];
      LiteralWire w;
      w.literal = lit;
      w.gadget_vertex = lit.negated ? g.right : g.left;
      w.relay = named(Role::connector, cname + (lit.negated ? ".-x" : ".+x") + std::to_string(lit.var + 1));
      b.add_edge(w.gadget_vertex, cg.b[k]);
      b.add_edge(cg.a[j], w.relay);
      b.add_edge(w.relay, w.gadget_vertex);
      cg.wires.push_back(w);
    }
  }
  red.graph = b.build();
  return red;
}

std::vector<Path> variable_cycle_paths(const TwReduction& red, const std::vector<bool>& right) {
  std::vector<Path> out;
  std::set<Edge> taken;
  for (std::size_t l = 0; l < red.n; ++l) {
    const bool r = l < right.size() && right[l];
    for (const DecisionGadget& g : red.variable_gadgets[l]) {
      Path p = r ? Path{g.attached[1], g.center, g.right, g.attached[2]}
                 : Path{g.attached[0], g.left, g.center, g.attached[1]};
      if (p.front() == p.back()) continue;
      if (!taken.insert(Edge::of(p.front(), p.back())).second) continue;
      out.push_back(std::move(p));
    }
  }
  return out;
}

TopoMinorModel realize_configuration(const TwReduction& red, const TwConfiguration& config) {
  TopoMinorModel model;
  model.mode = DepthMode::shallow(2);
  for (const auto& row : red.grid) model.nails.insert(model.nails.end(), row.begin(), row.end());
  for (const ClauseGadget& cg : red.clauses) {
    model.nails.insert(model.nails.end(), cg.a.begin(), cg.a.end());
    model.nails.insert(model.nails.end(), cg.b.begin(), cg.b.end());
  }
  std::sort(model.nails.begin(), model.nails.end());

  model.paths = variable_cycle_paths(red, config.right);
  std::set<VertexId> smoothed;
  for (const Path& p : model.paths) smoothed.insert(p.begin() + 1, p.end() - 1);

  std::set<Edge> taken;
  for (const Path& p : model.paths) taken.insert(Edge::of(p.front(), p.back()));
  auto add = [&](Path p) {
    if (taken.insert(Edge::of(p.front(), p.back())).second) model.paths.push_back(std::move(p));
  };

  for (std::size_t i = 1; i <= red.m; ++i) {
    const ClauseGadget& cg = red.clauses[i - 1];
    for (std::size_t l = 0; l < red.n; ++l) {
      const VertexId x = red.sequence_vertex(l, i);
      auto [j, k] = cg.pair_of_variable[l];
      const Connector& c = cg.connectors[l];
      add({x, c.to_a[0], c.to_a[1], cg.a[j]});
      add({x, c.to_b[0], c.to_b[1], cg.b[k]});
    }

    const std::optional<std::size_t> fill = i - 1 < config.fill.size() ? config.fill[i - 1] : std::nullopt;
    std::size_t gap = cg.chain.size();  // last tour edge
    if (fill) {
      const LiteralWire& w = cg.wires.at(*fill);
      if (smoothed.count(w.gadget_vertex)) {
        throw FormulaError("clause " + std::to_string(i) + ": wire of literal " +
                           std::string(w.literal.negated ? "-" : "") + std::to_string(w.literal.var + 1) +
                           " runs through an already smoothed gadget vertex");
      }
      gap = cg.tour_position[w.literal.var];
      auto [j, k] = cg.pair_of_variable[w.literal.var];
      add({cg.a[j], w.relay, w.gadget_vertex, cg.b[k]});
    }
    for (std::size_t p = 0; p < cg.chain.size(); ++p) {
      const DecisionGadget& g = cg.chain[p];
      if (p < gap) {
        add({g.attached[0], g.left, g.center, g.attached[1]});
      } else {
        add({g.attached[1], g.center, g.right, g.attached[2]});
      }
    }
  }
  return model;
}

TopoMinorModel tw_assignment_to_model(const TwReduction& red, const Assignment& a,
                                      std::span<const std::uint32_t> clause_choice) {
  Assignment full(red.n, false);
  for (std::size_t v = 0; v < std::min(a.size(), red.n); ++v) full[v] = a[v];
  if (a.size() < red.actual_vars) throw FormulaError("assignment is not total");
  if (!satisfies(red.source, full)) throw FormulaError("assignment does not satisfy the formula");
  if (!clause_choice.empty() && clause_choice.size() != red.m) {
    throw FormulaError("clause choice must name one variable per clause");
  }

  TwConfiguration config;
  config.right = full;
  config.fill.resize(red.m);
  for (std::size_t i = 0; i < red.m; ++i) {
    const auto& wires = red.clauses[i].wires;
    for (std::size_t w = 0; w < wires.size(); ++w) {
      const Literal& lit = wires[w].literal;
      if (full[lit.var] == lit.negated) continue;
      if (!clause_choice.empty() && lit.var != clause_choice[i]) continue;
      config.fill[i] = w;
      break;
    }
    if (!config.fill[i]) {
      throw FormulaError("clause " + std::to_string(i + 1) + ": chosen variable " +
                         std::to_string(clause_choice[i] + 1) + " does not satisfy it");
    }
  }
  return realize_configuration(red, config);
}

}  // namespace densub
