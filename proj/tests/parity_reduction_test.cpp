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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "densub/cnf.hpp"
#include "densub/errors.hpp"
#include "densub/parity_reduction.hpp"
#include "densub/solvers.hpp"
#include "test_util.hpp"

namespace densub {
namespace {

const Positive1in3Formula kTriple{3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
// Every variable in three of four clauses: 4 = 3 * (#true) has no solution.
const Positive1in3Formula kNoSolution{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

/// Planted instance: random clauses with exactly one true variable each,
/// topped up so every variable occurs three times.
std::pair<Positive1in3Formula, Assignment> planted(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Assignment a(n, false);
  a[0] = true;
  for (std::size_t v = 1; v + 2 < n; ++v) a[v] = rng() % 3 == 0;
  std::vector<std::uint32_t> yes, no;
  for (std::uint32_t v = 0; v < n; ++v) (a[v] ? yes : no).push_back(v);
  Positive1in3Formula phi;
  phi.num_vars = n;
  auto clause_with = [&](std::uint32_t must) {
    std::uint32_t t = a[must] ? must : yes[rng() % yes.size()];
    std::uint32_t f1 = a[must] ? no[rng() % no.size()] : must;
    std::uint32_t f2 = no[rng() % no.size()];
    while (f2 == f1) f2 = no[rng() % no.size()];
    phi.clauses.push_back({t, f1, f2});
  };
  for (std::uint32_t v = 0; v < n; ++v) clause_with(v);
  while (phi.clauses.size() < m) clause_with(static_cast<std::uint32_t>(rng() % n));
  return {ensure_min_frequency(phi), a};
}

TEST(ParityReduction, OddDepthOneCounts) {
  const ReductionOutput red = build_parity_reduction(kTriple, 1);
  EXPECT_EQ(red.graph.order(), 31u);
  EXPECT_EQ(red.graph.size(), 45u);
  EXPECT_EQ(red.target_density, Rational(15, 7));
  EXPECT_EQ(red.mode, DepthKind::subdivision);
  EXPECT_EQ(red.graph.role(red.apex), Role::apex);
  EXPECT_EQ(red.provenance.at(red.apex), "apex");
}

TEST(ParityReduction, RejectsRareVariables) {
  EXPECT_THROW(build_parity_reduction(Positive1in3Formula{3, {{0, 1, 2}}}, 1), FormulaError);
  EXPECT_THROW(build_parity_reduction(kTriple, 0), FormulaError);
}

TEST(ParityReduction, EvenDepthTwoStructure) {
  const ReductionOutput red = build_parity_reduction(kTriple, 2);
  EXPECT_EQ(red.mode, DepthKind::shallow);
  // 1 apex + 9 whites + 9 grays + 2 * 18 blacks.
  EXPECT_EQ(red.graph.order(), 55u);
  // 36 cycle and apex path edges, 9 attachments, 9 triangle edges.
  EXPECT_EQ(red.graph.size(), 36u + 18u + 9u + 9u);
  for (const auto& grays : red.clause_grays) {
    ASSERT_EQ(grays.size(), 3u);
    EXPECT_TRUE(red.graph.has_edge(grays[0], grays[1]));
    EXPECT_TRUE(red.graph.has_edge(grays[1], grays[2]));
    EXPECT_TRUE(red.graph.has_edge(grays[0], grays[2]));
  }
}

/// The graph without the apex and the interiors of its subdivided edges.
Graph without_apex_paths(const ReductionOutput& red) {
  std::set<VertexId> drop{red.apex};
  for (const auto& [e, inner] : red.subdivisions) {
    if (e.has(red.apex)) drop.insert(inner.begin(), inner.end());
  }
  std::vector<VertexId> keep;
  for (VertexId v : red.graph.vertices()) {
    if (!drop.count(v)) keep.push_back(v);
  }
  return induced_subgraph(red.graph, keep);
}

TEST(ParityReductionProperty, Bipartite) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    auto [phi, a] = planted(rng, 4 + trial % 5, 3 + trial % 8);
    EXPECT_TRUE(is_bipartite(build_parity_reduction(phi, 1).graph));
  }
}

TEST(ParityReductionProperty, DegreesAroundApex) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    auto [phi, a] = planted(rng, 4 + trial % 5, 3 + trial % 8);
    const ReductionOutput red = build_parity_reduction(phi, 1);
    // Whites keep the pendant black of their apex edge once the apex is
    // gone: two cycle neighbours, one gray, one black.
    const Graph minus_apex = remove_vertex(red.graph, red.apex);
    EXPECT_EQ(minus_apex.max_degree(), 4u);
    for (const auto& cycle : red.cycles) {
      for (VertexId w : cycle) EXPECT_EQ(minus_apex.degree(w), 4u);
    }
    EXPECT_LE(without_apex_paths(red).max_degree(), 3u);
  }
}

TEST(ParityReductionProperty, ForwardModelReachesTarget) {
  std::mt19937_64 rng(72);
  for (std::size_t r = 1; r <= 5; ++r) {
    for (int trial = 0; trial < 15; ++trial) {
      auto [phi, a] = planted(rng, 4 + trial % 6, 3 + trial % 10);
      ASSERT_TRUE(check_1in3(phi, a));
      const ReductionOutput red = build_parity_reduction(phi, r);
      const TopoMinorModel model = assignment_to_model(red, a);
      const MinorSummary s = verify_model(red.graph, model);
      const auto m = static_cast<std::int64_t>(phi.clauses.size());
      EXPECT_EQ(s.density, Rational(5 * m, 2 * m + 1));
      EXPECT_EQ(s.nail_count, static_cast<std::size_t>(2 * m + 1));
      if (r % 2 == 1) {
        TopoMinorModel exact = model;
        exact.mode = DepthMode::subdivision(r);
        EXPECT_EQ(verify_model(red.graph, exact).density, s.density);
      }
    }
  }
}

TEST(ParityReduction, ForwardModelNeedsSolution) {
  const ReductionOutput red = build_parity_reduction(kTriple, 1);
  EXPECT_THROW(assignment_to_model(red, {true, true, false}), FormulaError);
}

TEST(ParityReduction, SatisfiableInstanceReachesTargetExactly) {
  const ReductionOutput red = build_parity_reduction(kTriple, 1);
  const Solution s = densest_depth1_exact(red.graph, Depth1Mode::shallow, min_degree_filter(3));
  EXPECT_EQ(s.summary.density, red.target_density);
}

TEST(ParityReduction, UnsatisfiableInstanceStaysBelowTarget) {
  ASSERT_FALSE(testing::has_1in3_solution(kNoSolution));
  const ReductionOutput red = build_parity_reduction(kNoSolution, 1);
  EXPECT_EQ(red.target_density, Rational(20, 9));
  const Solution s = densest_depth1_exact(red.graph, Depth1Mode::shallow, min_degree_filter(3));
  EXPECT_LT(s.summary.density, red.target_density);
  EXPECT_EQ(verify_model(red.graph, s.model), s.summary);
}

}  // namespace
}  // namespace densub
