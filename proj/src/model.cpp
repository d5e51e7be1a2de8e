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

#include "densub/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::string describe(const Path& p) {
  if (p.empty()) return "<empty path>";
  return to_string(p.front()) + "~" + to_string(p.back());
}

Edge endpoint_key(const Path& p) {
  if (p.size() < 2) return Edge{};
  return Edge::of(p.front(), p.back());
}

}  // namespace

std::string to_string(const DepthMode& mode) {
  return (mode.kind == DepthKind::subdivision ? "subdivision(" : "shallow(") +
         std::to_string(mode.depth) + ")";
}

Graph minor_graph(const TopoMinorModel& m) {
  std::vector<Edge> edges;
  edges.reserve(m.paths.size());
  for (const auto& p : m.paths) {
    if (p.size() < 2) throw ModelError("path " + describe(p) + " has fewer than two vertices");
    edges.push_back(Edge::of(p.front(), p.back()));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw ModelError("duplicate nail pair " + to_string(*dup));
  }
  try {
    return Graph(m.nails, std::move(edges));
  } catch (const GraphError& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
}

MinorSummary verify_model(const Graph& g, const TopoMinorModel& m) {
  std::vector<VertexId> nails = m.nails;
  std::sort(nails.begin(), nails.end());
  if (nails.empty()) throw ModelError("model has no nails");
  for (std::size_t i = 0; i < nails.size(); ++i) {
    if (i > 0 && nails[i] == nails[i - 1]) {
      throw ModelError("duplicate nail " + to_string(nails[i]));
    }
    if (!g.has_vertex(nails[i])) {
      throw ModelError("nail " + to_string(nails[i]) + " is not a vertex of the graph");
    }
  }
  auto is_nail = [&](VertexId v) { return std::binary_search(nails.begin(), nails.end(), v); };

  std::vector<std::size_t> order(m.paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return endpoint_key(m.paths[a]) < endpoint_key(m.paths[b]);
  });

  std::map<VertexId, std::size_t> interior_owner;
  std::set<Edge> pairs;
  for (std::size_t idx : order) {
    const Path& p = m.paths[idx];
    if (p.size() < 2) throw ModelError("path " + describe(p) + " has fewer than two vertices");
    const std::string name = "path " + describe(p);
    for (VertexId end : {p.front(), p.back()}) {
      if (!is_nail(end)) throw ModelError(name + ": endpoint " + to_string(end) + " is not a nail");
    }
    if (p.front() == p.back()) throw ModelError(name + ": endpoints coincide");
    const std::size_t interior = p.size() - 2;
    if (!m.mode.admits(interior)) {
      throw ModelError(name + ": " + std::to_string(interior) + " interior vertices not allowed in " +
                       to_string(m.mode));
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      VertexId v = p[i];
      if (is_nail(v)) throw ModelError(name + ": interior vertex " + to_string(v) + " is a nail");
      auto [it, fresh] = interior_owner.emplace(v, idx);
      if (!fresh) {
        const Path& other = m.paths[it->second];
        throw ModelError("interiors not disjoint: vertex " + to_string(v) + " lies on " +
                         (it->second == idx ? name + " twice"
                                            : "path " + describe(other) + " and " + name));
      }
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) {
        throw ModelError(name + ": missing edge " + to_string(Edge::of(p[i], p[i + 1])));
      }
    }
    if (!pairs.insert(Edge::of(p.front(), p.back())).second) {
      throw ModelError("duplicate nail pair " + to_string(Edge::of(p.front(), p.back())));
    }
  }

  MinorSummary summary;
  summary.minor = Graph(nails, std::vector<Edge>(pairs.begin(), pairs.end()));
  summary.nail_count = summary.minor.order();
  summary.edge_count = summary.minor.size();
  summary.density = density(summary.minor);
  return summary;
}

}  // namespace densub
