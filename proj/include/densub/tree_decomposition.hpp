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

#ifndef DENSUB_TREE_DECOMPOSITION_HPP_
#define DENSUB_TREE_DECOMPOSITION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "densub/graph.hpp"
#include "densub/tw_reduction.hpp"

namespace densub {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;  // each sorted
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  /// Largest bag size minus one; -1 for no bags or only empty ones.
  long width() const;
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Decomposition following a cops-and-robber strategy on the treewidth
/// construction: a path of base bags, one per clause column i, holding the
/// first and last grid columns, columns i-1, i, i+1 and A_i u B_i, with one
/// leaf bag per gadget, connector path and literal wire hanging off the
/// base bag of its column. Width is at most 7 * sqrt(n) - 1.
TreeDecomposition cop_tree_decomposition(const TwReduction& red);

/// Checks the three tree decomposition axioms and returns the width. Throws
/// GraphError naming the first violation.
long verify_tree_decomposition(const Graph& g, const TreeDecomposition& t);

}  // namespace densub

#endif  // DENSUB_TREE_DECOMPOSITION_HPP_
