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

#include "densub/parity_reduction.hpp"

#include <algorithm>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::string var_name(std::uint32_t v) { return "x" + std::to_string(v + 1); }

class Wiring {
 public:
  explicit Wiring(ReductionOutput& out) : out_(out) {}

  void connect(VertexId a, VertexId b, std::size_t interior, Role role) {
    std::vector<VertexId> inner = builder.add_path(a, b, interior, role);
    if (b < a) std::reverse(inner.begin(), inner.end());
    out_.subdivisions[Edge::of(a, b)] = std::move(inner);
  }

  GraphBuilder builder;

 private:
  ReductionOutput& out_;
};

}  // namespace

ReductionOutput build_parity_reduction(const Positive1in3Formula& phi, std::size_t r) {
  phi.validate();
  if (r < 1) throw FormulaError("reduction depth r must be at least 1");
  const std::vector<std::size_t> freq = phi.frequencies();
  for (std::uint32_t v = 0; v < phi.num_vars; ++v) {
    if (freq[v] < 3) {
      throw FormulaError("variable " + std::to_string(v + 1) + " occurs in " +
                         std::to_string(freq[v]) + " clauses, at least 3 required");
    }
  }
  const bool odd = r % 2 == 1;
  const auto m = static_cast<std::int64_t>(phi.clauses.size());

  ReductionOutput out;
  out.r = r;
  out.mode = odd ? DepthKind::subdivision : DepthKind::shallow;
  out.source = phi;
  out.target_density = Rational(5 * m, 2 * m + 1);

  Wiring wiring(out);
  GraphBuilder& b = wiring.builder;
  out.apex = b.add_vertex(Role::apex);
  out.provenance[out.apex] = "apex";

  out.cycles.resize(phi.num_vars);
  for (std::uint32_t v = 0; v < phi.num_vars; ++v) {
    for (std::size_t j = 0; j < freq[v]; ++j) {
      VertexId w = b.add_vertex(Role::white);
      out.cycles[v].push_back(w);
      out.provenance[w] = "D" + std::to_string(v + 1) + "[" + std::to_string(j) + "]";
    }
  }

  // Clause occurrences claim cycle vertices in ascending clause order.
  std::vector<std::size_t> cursor(phi.num_vars, 0);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const Triple& clause = phi.clauses[c];
    std::array<VertexId, 3> whites{};
    for (std::size_t t = 0; t < 3; ++t) whites[t] = out.cycles[clause[t]][cursor[clause[t]]++];
    out.clause_whites.push_back(whites);

    const std::string name = "C" + std::to_string(c + 1);
    std::vector<VertexId> grays;
    if (odd) {
      VertexId u = b.add_vertex(Role::gray);
      out.provenance[u] = name;
      grays.push_back(u);
    } else {
      for (std::size_t t = 0; t < 3; ++t) {
        VertexId u = b.add_vertex(Role::gray);
        out.provenance[u] = name + ":" + var_name(clause[t]);
        grays.push_back(u);
      }
    }
    out.clause_grays.push_back(std::move(grays));
  }

  for (const auto& cycle : out.cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      wiring.connect(cycle[j], cycle[(j + 1) % cycle.size()], r, Role::black);
    }
  }
  for (const auto& cycle : out.cycles) {
    for (VertexId w : cycle) wiring.connect(out.apex, w, r, Role::black);
  }
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const auto& grays = out.clause_grays[c];
    const auto& whites = out.clause_whites[c];
    if (odd) {
      for (VertexId w : whites) wiring.connect(grays[0], w, (r - 1) / 2, Role::gray);
    } else {
      for (std::size_t t = 0; t < 3; ++t) wiring.connect(grays[t], whites[t], 0, Role::gray);
      for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t t = s + 1; t < 3; ++t) wiring.connect(grays[s], grays[t], r / 2 - 1, Role::gray);
      }
    }
  }
  out.graph = b.build();
  return out;
}

TopoMinorModel assignment_to_model(const ReductionOutput& red, const Assignment& a) {
  if (!check_1in3(red.source, a)) throw FormulaError("assignment not 1-in-3 satisfying");

  // Interior vertices of construction edge {x, y}, oriented from x to y.
  auto route = [&](VertexId x, VertexId y) {
    std::vector<VertexId> inner = red.subdivisions.at(Edge::of(x, y));
    if (y < x) std::reverse(inner.begin(), inner.end());
    return inner;
  };
  auto append = [](Path& p, const std::vector<VertexId>& inner) {
    p.insert(p.end(), inner.begin(), inner.end());
  };

  TopoMinorModel model;
  model.mode = DepthMode::shallow(red.r);
  model.nails.push_back(red.apex);
  for (std::uint32_t v = 0; v < red.source.num_vars; ++v) {
    if (a[v]) continue;
    const auto& cycle = red.cycles[v];
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      VertexId w = cycle[j];
      VertexId next = cycle[(j + 1) % cycle.size()];
      model.nails.push_back(w);
      Path apex_path{red.apex};
      append(apex_path, route(red.apex, w));
      apex_path.push_back(w);
      model.paths.push_back(std::move(apex_path));
      Path cycle_path{w};
      append(cycle_path, route(w, next));
      cycle_path.push_back(next);
      model.paths.push_back(std::move(cycle_path));
    }
  }
  const bool odd = red.r % 2 == 1;
  for (std::size_t c = 0; c < red.source.clauses.size(); ++c) {
    const Triple& clause = red.source.clauses[c];
    std::vector<std::size_t> open;
    for (std::size_t t = 0; t < 3; ++t) {
      if (!a[clause[t]]) open.push_back(t);
    }
    const VertexId w1 = red.clause_whites[c][open[0]];
    const VertexId w2 = red.clause_whites[c][open[1]];
    const auto& grays = red.clause_grays[c];
    Path p{w1};
    if (odd) {
      append(p, route(w1, grays[0]));
      p.push_back(grays[0]);
      append(p, route(grays[0], w2));
    } else {
      VertexId u1 = grays[open[0]];
      VertexId u2 = grays[open[1]];
      p.push_back(u1);
      append(p, route(u1, u2));
      p.push_back(u2);
    }
    p.push_back(w2);
    model.paths.push_back(std::move(p));
  }
  std::sort(model.nails.begin(), model.nails.end());
  return model;
}

}  // namespace densub
