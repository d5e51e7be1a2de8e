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

#ifndef DENSUB_MATCHING_HPP_
#define DENSUB_MATCHING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "densub/graph.hpp"

namespace densub {

/// Depth-1 problem variants: 1-subdivision (every minor edge through exactly
/// one subdivision vertex) and 1/2-shallow topological minor (zero or one).
enum class Depth1Mode { subdivision, shallow };

/// Unordered pair of nails, a < b.
struct NailPair {
  VertexId a{};
  VertexId b{};

  static NailPair of(VertexId x, VertexId y) { return x < y ? NailPair{x, y} : NailPair{y, x}; }
  friend auto operator<=>(const NailPair&, const NailPair&) = default;
};

/// Bipartite graph between candidate subdivision vertices (left) and nail
/// pairs (right); left vertex v sees pair {x, y} iff both are neighbours of v.
/// In shallow mode nail pairs that are already adjacent are listed in
/// `forced_pairs` and kept off the right side.
struct AuxBipartite {
  std::vector<VertexId> left;
  std::vector<NailPair> right;
  std::vector<std::vector<std::size_t>> adjacency;  // left index -> sorted right indices
  std::vector<NailPair> forced_pairs;
};

AuxBipartite build_aux_graph(const Graph& g, std::span<const VertexId> nails, Depth1Mode mode);

/// Maximum-cardinality matching on an index-based bipartite graph. Returns,
/// for every left index, the matched right index. Left vertices are augmented
/// in ascending index order, so the matched left set is the lexicographically
/// first one among all maximum matchings.
std::vector<std::optional<std::size_t>> max_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adjacency);

/// Matching of `b` as (subdivision vertex, nail pair) entries, sorted by vertex.
std::vector<std::pair<VertexId, NailPair>> max_bipartite_matching(const AuxBipartite& b);

}  // namespace densub

#endif  // DENSUB_MATCHING_HPP_
