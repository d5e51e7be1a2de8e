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

#ifndef DENSUB_MODEL_HPP_
#define DENSUB_MODEL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "densub/graph.hpp"
#include "densub/rational.hpp"

namespace densub {

enum class DepthKind { subdivision, shallow };

/// subdivision(r): every path has exactly r interior vertices.
/// shallow(r): every path has between 0 and r interior vertices.
struct DepthMode {
  DepthKind kind = DepthKind::shallow;
  std::size_t depth = 1;

  static DepthMode subdivision(std::size_t r) { return {DepthKind::subdivision, r}; }
  static DepthMode shallow(std::size_t r) { return {DepthKind::shallow, r}; }

  bool admits(std::size_t interior) const {
    return kind == DepthKind::subdivision ? interior == depth : interior <= depth;
  }

  friend bool operator==(const DepthMode&, const DepthMode&) = default;
};

std::string to_string(const DepthMode& mode);

/// Nail-to-nail path, endpoints included.
using Path = std::vector<VertexId>;

/// Explicit witness of a topological minor: the nails plus one internally
/// disjoint path per minor edge.
struct TopoMinorModel {
  std::vector<VertexId> nails;
  std::vector<Path> paths;
  DepthMode mode;

  friend bool operator==(const TopoMinorModel&, const TopoMinorModel&) = default;
};

struct MinorSummary {
  Graph minor;
  Rational density;
  std::size_t nail_count = 0;
  std::size_t edge_count = 0;

  friend bool operator==(const MinorSummary&, const MinorSummary&) = default;
};

/// Checks that `m` is a model of its minor inside `g` and returns the minor.
/// Paths are scanned in canonical order (sorted by their endpoint pair), and
/// the first violation is reported as a ModelError naming the offending path
/// or vertex.
MinorSummary verify_model(const Graph& g, const TopoMinorModel& m);

/// The minor H: one vertex per nail, one edge per path. Only the endpoints of
/// each path are inspected; use verify_model for the full check.
Graph minor_graph(const TopoMinorModel& m);

}  // namespace densub

#endif  // DENSUB_MODEL_HPP_
