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

#include "densub/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <utility>

#include "densub/errors.hpp"

namespace densub {
namespace {

constexpr std::array<std::pair<Role, std::string_view>, 14> kRoleNames = {{
    {Role::white, "white"},
    {Role::gray, "gray"},
    {Role::black, "black"},
    {Role::apex, "apex"},
    {Role::nail_candidate, "nail-candidate"},
    {Role::grid, "grid"},
    {Role::clique_a, "clique-a"},
    {Role::clique_b, "clique-b"},
    {Role::decision_left, "decision-left"},
    {Role::decision_center, "decision-center"},
    {Role::decision_right, "decision-right"},
    {Role::connector, "connector"},
    {Role::side_x, "side-x"},
    {Role::side_y, "side-y"},
}};

}  // namespace

std::string to_string(VertexId v) { return std::to_string(raw(v)); }

std::string to_string(const Edge& e) { return to_string(e.u) + "-" + to_string(e.v); }

std::string_view to_string(Role role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

std::optional<Role> role_from_string(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             std::map<VertexId, Role> roles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), roles_(std::move(roles)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end()); dup != vertices_.end()) {
    throw GraphError("duplicate vertex " + to_string(*dup));
  }
  for (auto& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + to_string(e.u));
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("parallel edge " + to_string(*dup));
  }
  adjacency_.resize(vertices_.size());
  for (const auto& e : edges_) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside the vertex set");
    }
    adjacency_[index_of(e.u)].push_back(e.v);
    adjacency_[index_of(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  for (const auto& [v, role] : roles_) {
    if (!has_vertex(v)) throw GraphError("role on unknown vertex " + to_string(v));
  }
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(a, b));
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw GraphError("no such vertex " + to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adjacency_[index_of(v)];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::optional<Role> Graph::role(VertexId v) const {
  auto it = roles_.find(v);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> Graph::max_id() const {
  if (vertices_.empty()) return std::nullopt;
  return vertices_.back();
}

VertexId GraphBuilder::add_vertex(std::optional<Role> role) {
  VertexId id{next_id_};
  add_vertex(id, role);
  return id;
}

void GraphBuilder::add_vertex(VertexId id, std::optional<Role> role) {
  vertices_.push_back(id);
  if (role) roles_[id] = *role;
  next_id_ = std::max(next_id_, raw(id) + 1);
}

void GraphBuilder::add_edge(VertexId a, VertexId b) { edges_.push_back(Edge::of(a, b)); }

std::vector<VertexId> GraphBuilder::add_path(VertexId from, VertexId to, std::size_t interior,
                                             std::optional<Role> interior_role) {
  std::vector<VertexId> inner;
  inner.reserve(interior);
  VertexId prev = from;
  for (std::size_t i = 0; i < interior; ++i) {
    VertexId v = add_vertex(interior_role);
    add_edge(prev, v);
    inner.push_back(v);
    prev = v;
  }
  add_edge(prev, to);
  return inner;
}

void GraphBuilder::set_role(VertexId v, Role role) { roles_[v] = role; }

Graph GraphBuilder::build() const { return Graph(vertices_, edges_, roles_); }

Graph subdivide_edge(const Graph& g, Edge e, std::size_t k) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) throw GraphError("no such edge " + to_string(e));
  if (k == 0) return g;
  std::vector<VertexId> vertices(g.vertices().begin(), g.vertices().end());
  std::vector<Edge> edges;
  edges.reserve(g.size() + k);
  for (const auto& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  std::uint32_t next = raw(*g.max_id()) + 1;
  VertexId prev = e.u;
  for (std::size_t i = 0; i < k; ++i) {
    VertexId fresh{next++};
    vertices.push_back(fresh);
    edges.push_back(Edge::of(prev, fresh));
    prev = fresh;
  }
  edges.push_back(Edge::of(prev, e.v));
  return Graph(std::move(vertices), std::move(edges), g.roles());
}

Graph smooth_vertex(const Graph& g, VertexId v) {
  auto nbrs = g.neighbors(v);
  if (nbrs.size() != 2) throw GraphError("not a degree-2 vertex: " + to_string(v));
  VertexId a = nbrs[0];
  VertexId b = nbrs[1];
  if (g.has_edge(a, b)) {
    throw GraphError("smoothing would create a parallel edge at vertex " + to_string(v));
  }
  std::vector<VertexId> vertices;
  vertices.reserve(g.order() - 1);
  for (VertexId u : g.vertices()) {
    if (u != v) vertices.push_back(u);
  }
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  for (const auto& e : g.edges()) {
    if (!e.has(v)) edges.push_back(e);
  }
  edges.push_back(Edge::of(a, b));
  auto roles = g.roles();
  roles.erase(v);
  return Graph(std::move(vertices), std::move(edges), std::move(roles));
}

Rational density(const Graph& g) {
  if (g.empty()) throw GraphError("density undefined for the empty graph");
  return Rational(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(g.order()));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> vertices(keep.begin(), keep.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> edges;
  std::map<VertexId, Role> roles;
  for (VertexId v : vertices) {
    if (auto r = g.role(v)) roles[v] = *r;
    for (VertexId w : g.neighbors(v)) {
      if (v < w && std::binary_search(vertices.begin(), vertices.end(), w)) {
        edges.push_back(Edge{v, w});
      }
    }
  }
  return Graph(std::move(vertices), std::move(edges), std::move(roles));
}

Graph remove_vertex(const Graph& g, VertexId v) {
  std::vector<VertexId> keep;
  for (VertexId u : g.vertices()) {
    if (u != v) keep.push_back(u);
  }
  if (keep.size() == g.order()) throw GraphError("no such vertex " + to_string(v));
  return induced_subgraph(g, keep);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(g.vertices()[i])) {
        std::size_t j = g.index_of(w);
        if (side[j] == -1) {
          side[j] = 1 - side[i];
          queue.push(j);
        } else if (side[j] == side[i]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace densub
