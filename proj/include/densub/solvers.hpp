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

#ifndef DENSUB_SOLVERS_HPP_
#define DENSUB_SOLVERS_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "densub/errors.hpp"
#include "densub/graph.hpp"
#include "densub/matching.hpp"
#include "densub/model.hpp"
#include "densub/rational.hpp"

namespace densub {

struct SolveLimits {
  std::size_t max_vertices = 64;
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
  std::chrono::duration<double> time_budget{600.0};
};

/// A verified model together with the minor it witnesses.
struct Solution {
  MinorSummary summary;
  TopoMinorModel model;
};

/// Decides which vertices may be nails in the exact search.
using NailFilter = std::function<bool(const Graph&, VertexId)>;

/// Keeps vertices of degree >= k. Degrees of surviving vertices do not change
/// when degree-2 vertices are smoothed, so this is also the degree filter of
/// the smoothed graph.
NailFilter min_degree_filter(std::size_t k);

DepthMode depth_mode(Depth1Mode mode);

/// Densest depth-1 minor whose nail set is exactly `nails`: a maximum
/// matching of the auxiliary bipartite graph plus, in shallow mode, every
/// direct edge between nails. Throws Error on an empty nail set.
Solution densest_fixed_nails(const Graph& g, std::span<const VertexId> nails, Depth1Mode mode);

/// Edge count of densest_fixed_nails without building the model.
std::size_t fixed_nails_edge_count(const Graph& g, std::span<const VertexId> nails,
                                   Depth1Mode mode);

/// Exact densest 1-subdivision / 1/2-shallow topological minor: tries every
/// nonempty subset of the filtered vertices as nail set. Ties go to the
/// lexicographically smallest nail set. Throws BudgetExceeded<Solution> with
/// the best witness so far when the limits run out.
Solution densest_depth1_exact(const Graph& g, Depth1Mode mode, const NailFilter& filter = {},
                              const SolveLimits& limits = {});

struct DenseSubgraph {
  std::vector<VertexId> vertices;
  Graph subgraph;
  Rational density;
};

/// Maximum-density subgraph via minimum cuts. Candidate densities are all
/// fractions e/k with e <= ||g|| and k <= |g|; the answer is found by binary
/// search over them, each step an exact integer min-cut test. The witness is
/// the source side of the inclusion-minimal minimum cut.
DenseSubgraph densest_subgraph(const Graph& g);

struct BipartiteSubdivision {
  bool feasible = false;
  Rational best_ratio;
  std::vector<VertexId> x_prime;
  std::vector<VertexId> y_prime;
  /// Pair of Y'-vertices each X'-vertex is smoothed into.
  std::vector<std::pair<VertexId, NailPair>> assignment;
};

/// Dense Bipartite Subdivision: is there X' of X and nonempty Y' of Y such
/// that every x in X' is smoothed into its own pair of neighbours inside Y'
/// and |X'| / |Y'| >= target? Enumerates Y' and matches X against pairs of Y'.
/// The reported witness maximizes the ratio (ties: smallest Y').
BipartiteSubdivision dense_bipartite_subdivision(std::span<const VertexId> x_side,
                                                 std::span<const VertexId> y_side,
                                                 std::span<const Edge> edges, Rational target,
                                                 const SolveLimits& limits = {});

}  // namespace densub

#endif  // DENSUB_SOLVERS_HPP_
