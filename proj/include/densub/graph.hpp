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

#ifndef DENSUB_GRAPH_HPP_
#define DENSUB_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "densub/rational.hpp"

namespace densub {

/// Opaque vertex identifier.
enum class VertexId : std::uint32_t {};

constexpr std::uint32_t raw(VertexId v) { return static_cast<std::uint32_t>(v); }
std::string to_string(VertexId v);

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u{};
  VertexId v{};

  /// Normalizes the endpoint order. Does not reject self-loops; Graph does.
  static Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool has(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Role tags attached to vertices by the reduction builders.
enum class Role : std::uint8_t {
  white,
  gray,
  black,
  apex,
  nail_candidate,
  grid,
  clique_a,
  clique_b,
  decision_left,
  decision_center,
  decision_right,
  connector,
  side_x,
  side_y,
};

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view name);

/// Immutable simple undirected graph. Vertices and edges are kept sorted, so
/// two graphs with the same vertex ids, edges and roles compare equal.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on duplicate vertices, self-loops, parallel edges,
  /// dangling endpoints or roles on unknown vertices.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
        std::map<VertexId, Role> roles = {});

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const std::map<VertexId, Role>& roles() const { return roles_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  /// Sorted neighbour list; throws GraphError for unknown vertices.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  std::optional<Role> role(VertexId v) const;

  /// Largest id in use, nullopt for the empty graph.
  std::optional<VertexId> max_id() const;
  /// Position of `v` in vertices(); throws GraphError if absent.
  std::size_t index_of(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.roles_ == b.roles_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::map<VertexId, Role> roles_;
};

/// Mutable accumulator for building graphs vertex by vertex. Fresh ids are
/// handed out sequentially starting at 0 (or after the largest explicit id).
class GraphBuilder {
 public:
  VertexId add_vertex(std::optional<Role> role = std::nullopt);
  void add_vertex(VertexId id, std::optional<Role> role = std::nullopt);
  void add_edge(VertexId a, VertexId b);
  /// Joins `from` and `to` by a path through `interior` fresh vertices and
  /// returns those vertices in order from `from` to `to`.
  std::vector<VertexId> add_path(VertexId from, VertexId to, std::size_t interior,
                                 std::optional<Role> interior_role = std::nullopt);
  void set_role(VertexId v, Role role);

  std::size_t order() const { return vertices_.size(); }

  Graph build() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, Role> roles_;
  std::uint32_t next_id_ = 0;
};

/// Replaces `e` by a path with `k` fresh interior vertices, numbered
/// max_id+1, max_id+2, ... from e.u towards e.v.
Graph subdivide_edge(const Graph& g, Edge e, std::size_t k);

/// Removes the degree-2 vertex `v` and joins its two neighbours.
Graph smooth_vertex(const Graph& g, VertexId v);

/// ||g|| / |g|.
Rational density(const Graph& g);

/// Subgraph induced on `keep` (ids not in g are rejected); roles are kept.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

Graph remove_vertex(const Graph& g, VertexId v);

bool is_bipartite(const Graph& g);

}  // namespace densub

#endif  // DENSUB_GRAPH_HPP_
