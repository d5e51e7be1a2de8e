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

#ifndef DENSUB_ORACLE_HPP_
#define DENSUB_ORACLE_HPP_

#include <span>

#include "densub/graph.hpp"
#include "densub/model.hpp"
#include "densub/solvers.hpp"

namespace densub {

// Exhaustive model enumeration, used as ground truth for the matching-based
// solvers. Shares no code with them beyond verify_model.

/// Best model on a fixed nail set: depth-first search over nail pairs, each
/// either skipped or routed along any admissible path through unused
/// non-nail vertices.
Solution brute_force_fixed_nails(const Graph& g, std::span<const VertexId> nails, DepthMode mode,
                                 const SolveLimits& limits = {});

/// Densest minor over all nonempty nail sets. Intended for graphs with at
/// most 8 or so vertices; limits.max_vertices is enforced.
Solution brute_force_densest(const Graph& g, DepthMode mode, const SolveLimits& limits = {});

}  // namespace densub

#endif  // DENSUB_ORACLE_HPP_
