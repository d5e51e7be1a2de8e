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

#ifndef DENSUB_PARITY_REDUCTION_HPP_
#define DENSUB_PARITY_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "densub/cnf.hpp"
#include "densub/graph.hpp"
#include "densub/model.hpp"
#include "densub/rational.hpp"

namespace densub {

/// Graph built from a Positive 1-in-3SAT formula whose densest depth-r/2
/// minor reaches 5m/(2m+1) exactly when the formula is 1-in-3 satisfiable.
///
/// Vertex roles: white (cycle vertices D_i), apex, gray (clause vertex for
/// odd r, clause triangle plus its subdivisions for even r) and black
/// (subdivision vertices of cycle and apex edges).
struct ReductionOutput {
  Graph graph;
  Rational target_density;
  std::size_t r = 1;
  /// subdivision for odd r (the forward model is an exact r-subdivision),
  /// shallow for even r.
  DepthKind mode = DepthKind::subdivision;
  Positive1in3Formula source;

  VertexId apex{};
  /// Whites of D_i in cycle order.
  std::vector<std::vector<VertexId>> cycles;
  /// Per clause: the single gray vertex (odd r) or the triangle (even r),
  /// triangle vertex t belonging to the clause's t-th variable.
  std::vector<std::vector<VertexId>> clause_grays;
  /// Per clause: the white claimed from each of its three variables' cycles.
  std::vector<std::array<VertexId, 3>> clause_whites;
  /// Interior vertices of every subdivided construction edge, listed from
  /// the smaller endpoint id to the larger one. Edges that were not
  /// subdivided have an empty entry.
  std::map<Edge, std::vector<VertexId>> subdivisions;
  /// Human-readable origin of every white, gray and apex vertex.
  std::map<VertexId, std::string> provenance;
};

/// Builds the odd-r or even-r construction. Requires every variable to occur
/// in at least three clauses (see ensure_min_frequency) and r >= 1.
ReductionOutput build_parity_reduction(const Positive1in3Formula& phi, std::size_t r);

/// Forward direction: from a 1-in-3 satisfying assignment, a shallow(r)
/// model with 2m+1 nails (apex plus the whites of false variables) and 5m
/// edges.
TopoMinorModel assignment_to_model(const ReductionOutput& red, const Assignment& a);

}  // namespace densub

#endif  // DENSUB_PARITY_REDUCTION_HPP_
