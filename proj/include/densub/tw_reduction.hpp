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

#ifndef DENSUB_TW_REDUCTION_HPP_
#define DENSUB_TW_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "densub/cnf.hpp"
#include "densub/graph.hpp"
#include "densub/model.hpp"
#include "densub/rational.hpp"

namespace densub {

/// Path d_L - d_C - d_R attached to a vertex triple (v1, v2, v3) by the edges
/// d_L v1, d_C v2, d_R v3. Smoothing d_L and d_C yields v1 v2 (left
/// configuration), smoothing d_C and d_R yields v2 v3 (right configuration).
struct DecisionGadget {
  VertexId left{};
  VertexId center{};
  VertexId right{};
  std::array<VertexId, 3> attached{};
};

/// A literal of clause i wired to the decision gadget of its variable at
/// column i: `gadget_vertex` (d_L if positive, d_R if negative) is adjacent
/// to B_i[k] and reaches A_i[j] through `relay`.
struct LiteralWire {
  Literal literal;
  VertexId gadget_vertex{};
  VertexId relay{};
};

/// Interior vertices of the two 3-edge paths joining X_l[i] to A_i[j] and B_i[k].
struct Connector {
  std::array<VertexId, 2> to_a{};
  std::array<VertexId, 2> to_b{};
};

struct ClauseGadget {
  std::vector<VertexId> a;  // A_i[1..s] at positions 0..s-1
  std::vector<VertexId> b;
  /// Closed Eulerian tour of the biclique (A_i, B_i): n + 1 vertices,
  /// starting and ending at A_i[s].
  std::vector<VertexId> tour;
  /// n - 1 gadgets; chain[p] is attached to tour[p], tour[p+1], tour[p+2].
  std::vector<DecisionGadget> chain;
  /// Per variable: the biclique pair (j, k), 0-based, assigned to it.
  std::vector<std::pair<std::size_t, std::size_t>> pair_of_variable;
  /// Per variable: index e of the tour edge {tour[e], tour[e+1]} that is
  /// the variable's pair.
  std::vector<std::size_t> tour_position;
  std::vector<Connector> connectors;  // per variable
  std::vector<LiteralWire> wires;     // one per distinct literal of the clause
};

/// The bounded-treewidth construction for CNF-SAT. Rows of the grid are
/// 0-based, columns 1-based (column i hosts clause i), and variable l
/// (0-based) sits on row (l + i * floor(l / s)) mod s of column i, where
/// s = sqrt(n).
struct TwReduction {
  Graph graph;
  std::size_t n = 0;  // padded variable count
  std::size_t m = 0;  // clause count
  std::size_t side = 0;  // sqrt(n), even
  std::size_t actual_vars = 0;  // variables before padding
  Rational rho;
  CnfFormula source;  // padded

  std::vector<std::vector<VertexId>> grid;  // grid[row][col - 1]
  /// variable_gadgets[l][col - 1] is attached to X_l[col-1], X_l[col],
  /// X_l[col+1], columns taken cyclically.
  std::vector<std::vector<DecisionGadget>> variable_gadgets;
  std::vector<ClauseGadget> clauses;
  std::map<VertexId, std::string> provenance;

  std::size_t row_of(std::size_t var, std::size_t col) const;
  VertexId sequence_vertex(std::size_t var, std::size_t col) const;
  /// Column neighbour of `col` in direction `step` (-1 or +1), cyclically.
  std::size_t cyclic_column(std::size_t col, int step) const;

  std::size_t nominal_nail_count() const { return 3 * m * side; }
  std::size_t nominal_edge_count() const { return 4 * m * n; }
};

/// Builds the construction for an already padded formula; throws
/// FormulaError if sqrt(num_vars) is not an even integer.
TwReduction build_tw_reduction(const CnfFormula& padded, std::size_t actual_vars);
inline TwReduction build_tw_reduction(const CnfFormula& padded) {
  return build_tw_reduction(padded, padded.num_vars);
}

/// Deterministic closed Eulerian tour of K_{s,s} (s even) on the given sides,
/// starting at a.back() and trying neighbours in ascending position order.
std::vector<VertexId> biclique_euler_tour(std::span<const VertexId> a, std::span<const VertexId> b);

/// One point of the structured configuration family: a left/right
/// configuration per variable and, per clause, which literal wire (if any)
/// closes the gap left in the tour chain.
struct TwConfiguration {
  std::vector<bool> right;                       // per variable, true = right configuration
  std::vector<std::optional<std::size_t>> fill;  // per clause, index into ClauseGadget::wires
};

/// Paths realized by the variable gadgets under `right`, in variable-major
/// column order. Paths whose nail pair is already taken, or whose endpoints
/// coincide (fewer than three columns), are left out.
std::vector<Path> variable_cycle_paths(const TwReduction& red, const std::vector<bool>& right);

/// Turns a configuration into a shallow(2) model on nails A u B u R. A
/// clause with a fill uses the wire's pair as the chain gap and routes the
/// missing edge through the wire; without a fill the gap is the last tour
/// edge. Throws FormulaError if a fill's gadget vertex is already smoothed.
TopoMinorModel realize_configuration(const TwReduction& red, const TwConfiguration& config);

/// Forward direction: variables true -> right configuration. `clause_choice`
/// names, per clause, the (0-based) variable whose literal satisfies it;
/// empty means the first satisfied literal.
TopoMinorModel tw_assignment_to_model(const TwReduction& red, const Assignment& a,
                                      std::span<const std::uint32_t> clause_choice = {});

}  // namespace densub

#endif  // DENSUB_TW_REDUCTION_HPP_
