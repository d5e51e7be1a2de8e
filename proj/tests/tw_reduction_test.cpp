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

#include <map>
#include <random>
#include <set>

#include "densub/cnf.hpp"
#include "densub/errors.hpp"
#include "densub/structured_search.hpp"
#include "densub/tw_reduction.hpp"
#include "test_util.hpp"

namespace densub {
namespace {

Literal pos(std::uint32_t v) { return {v, false}; }
Literal neg(std::uint32_t v) { return {v, true}; }

CnfFormula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  CnfFormula f;
  f.num_vars = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Literal> c;
    const std::size_t width = 1 + rng() % 3;
    for (std::size_t k = 0; k < width; ++k) c.push_back({static_cast<std::uint32_t>(rng() % n), rng() % 2 == 1});
    f.clauses.push_back(c);
  }
  return f;
}

const CnfFormula kFourClauses{4, {{pos(0), pos(1), pos(2)}, {neg(0), pos(1), pos(3)}, {pos(0), neg(2), pos(3)},
                                  {pos(1), pos(2), neg(3)}}};

TEST(TwReduction, SmallestGridShape) {
  const CnfFormula f{4, {{pos(0)}, {pos(1)}}};
  const TwReduction red = build_tw_reduction(f);
  EXPECT_EQ(red.side, 2u);
  EXPECT_EQ(red.grid.size(), 2u);
  EXPECT_EQ(red.grid[0].size(), 2u);
  EXPECT_EQ(red.rho, Rational(8, 3));
  for (const ClauseGadget& cg : red.clauses) {
    EXPECT_EQ(cg.a.size(), 2u);
    EXPECT_EQ(cg.b.size(), 2u);
    EXPECT_EQ(cg.chain.size(), 3u);
    EXPECT_EQ(cg.tour.size(), 5u);
  }
  EXPECT_EQ(red.nominal_nail_count(), 12u);
  EXPECT_EQ(red.nominal_edge_count(), 32u);
}

TEST(TwReduction, RequiresPaddedFormula) {
  EXPECT_THROW(build_tw_reduction(CnfFormula{3, {{pos(0)}}}), FormulaError);
  EXPECT_THROW(build_tw_reduction(CnfFormula{9, {{pos(0)}}}), FormulaError);
  EXPECT_NO_THROW(build_tw_reduction(pad_formula(CnfFormula{3, {{pos(0)}}}), 3));
}

TEST(TwReduction, RhoScalesWithSide) {
  EXPECT_EQ(build_tw_reduction(CnfFormula{16, {{pos(0)}}}).rho, Rational(16, 3));
  EXPECT_EQ(build_tw_reduction(CnfFormula{36, {{pos(0)}}}).rho, Rational(8));
}

TEST(TwReductionProperty, EulerTourUsesEveryBicliqueEdgeOnce) {
  for (std::uint32_t s : {2u, 4u, 6u, 8u}) {
    std::vector<VertexId> a, b;
    for (std::uint32_t i = 0; i < s; ++i) {
      a.push_back(VertexId{i});
      b.push_back(VertexId{100 + i});
    }
    const auto tour = biclique_euler_tour(a, b);
    ASSERT_EQ(tour.size(), s * s + 1);
    EXPECT_EQ(tour.front(), a.back());
    EXPECT_EQ(tour.back(), a.back());
    std::map<Edge, int> seen;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) ++seen[Edge::of(tour[i], tour[i + 1])];
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(s) * s);
    for (const auto& [e, count] : seen) {
      EXPECT_EQ(count, 1);
      EXPECT_TRUE((raw(e.u) < 100) != (raw(e.v) < 100));
    }
  }
  const std::vector<VertexId> odd{VertexId{0}, VertexId{1}, VertexId{2}};
  EXPECT_THROW(biclique_euler_tour(odd, odd), FormulaError);
}

TEST(TwReductionProperty, ClauseToursInBuiltGraph) {
  std::mt19937_64 rng(81);
  for (std::size_t n : {4u, 16u}) {
    const TwReduction red = build_tw_reduction(random_formula(rng, n, 3));
    for (const ClauseGadget& cg : red.clauses) {
      std::set<Edge> pairs;
      for (std::size_t i = 0; i + 1 < cg.tour.size(); ++i) pairs.insert(Edge::of(cg.tour[i], cg.tour[i + 1]));
      EXPECT_EQ(pairs.size(), n);
    }
  }
}

TEST(TwReduction, SequencesInterleaveRows) {
  const TwReduction red = build_tw_reduction(CnfFormula{16, {{pos(0)}, {pos(1)}, {pos(2)}}});
  for (std::size_t col = 1; col <= red.m; ++col) {
    // Each row of a column carries exactly one variable of every block.
    std::map<std::size_t, std::set<std::size_t>> blocks_by_row;
    for (std::size_t l = 0; l < red.n; ++l) {
      const std::size_t row = red.row_of(l, col);
      EXPECT_EQ(row, (l + col * (l / red.side)) % red.side);
      EXPECT_TRUE(blocks_by_row[row].insert(l / red.side).second);
      EXPECT_EQ(red.sequence_vertex(l, col), red.grid[row][col - 1]);
    }
  }
}

TEST(TwReduction, PairAssignmentIsBijective) {
  const TwReduction red = build_tw_reduction(CnfFormula{16, {{pos(0)}, {pos(1)}}});
  for (const ClauseGadget& cg : red.clauses) {
    std::set<std::pair<std::size_t, std::size_t>> pairs(cg.pair_of_variable.begin(), cg.pair_of_variable.end());
    EXPECT_EQ(pairs.size(), red.n);
    for (std::size_t l = 0; l < red.n; ++l) {
      auto [j, k] = cg.pair_of_variable[l];
      const std::size_t e = cg.tour_position[l];
      EXPECT_EQ(Edge::of(cg.tour[e], cg.tour[e + 1]), Edge::of(cg.a[j], cg.b[k]));
    }
  }
}

TEST(TwReduction, GadgetAttachments) {
  const TwReduction red = build_tw_reduction(kFourClauses);
  const Graph& g = red.graph;
  for (std::size_t l = 0; l < red.n; ++l) {
    for (std::size_t col = 1; col <= red.m; ++col) {
      const DecisionGadget& d = red.variable_gadgets[l][col - 1];
      EXPECT_TRUE(g.has_edge(d.left, d.center));
      EXPECT_TRUE(g.has_edge(d.center, d.right));
      EXPECT_TRUE(g.has_edge(d.left, red.sequence_vertex(l, red.cyclic_column(col, -1))));
      EXPECT_TRUE(g.has_edge(d.center, red.sequence_vertex(l, col)));
      EXPECT_TRUE(g.has_edge(d.right, red.sequence_vertex(l, red.cyclic_column(col, +1))));
    }
  }
  for (std::size_t i = 0; i < red.m; ++i) {
    EXPECT_EQ(red.clauses[i].wires.size(), kFourClauses.clauses[i].size());
    for (const LiteralWire& w : red.clauses[i].wires) {
      const DecisionGadget& d = red.variable_gadgets[w.literal.var][i];
      EXPECT_EQ(w.gadget_vertex, w.literal.negated ? d.right : d.left);
      auto [j, k] = red.clauses[i].pair_of_variable[w.literal.var];
      EXPECT_TRUE(g.has_edge(w.gadget_vertex, red.clauses[i].b[k]));
      EXPECT_TRUE(g.has_edge(w.relay, red.clauses[i].a[j]));
    }
  }
}

TEST(TwReduction, ForwardModelReachesRhoOnFourColumns) {
  const TwReduction red = build_tw_reduction(kFourClauses);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const Assignment a = testing::from_mask(mask, 4);
    if (!satisfies(kFourClauses, a)) {
      EXPECT_THROW(tw_assignment_to_model(red, a), FormulaError);
      continue;
    }
    const MinorSummary s = verify_model(red.graph, tw_assignment_to_model(red, a));
    EXPECT_EQ(s.nail_count, red.nominal_nail_count());
    EXPECT_EQ(s.edge_count, red.nominal_edge_count());
    EXPECT_EQ(s.density, red.rho);
  }
}

TEST(TwReduction, ForwardModelOnLargerGrid) {
  std::mt19937_64 rng(82);
  CnfFormula f = random_formula(rng, 16, 4);
  const Assignment a = testing::from_mask(rng(), 16);
  for (auto& clause : f.clauses) clause.push_back({clause[0].var, !a[clause[0].var]});
  ASSERT_TRUE(satisfies(f, a));
  const TwReduction red = build_tw_reduction(f);
  const MinorSummary s = verify_model(red.graph, tw_assignment_to_model(red, a));
  EXPECT_EQ(s.density, red.rho);
}

TEST(TwReduction, ClauseChoiceMustSatisfy) {
  const TwReduction red = build_tw_reduction(kFourClauses);
  const Assignment a{true, true, true, true};
  const std::vector<std::uint32_t> good{0, 1, 0, 1};
  EXPECT_NO_THROW(tw_assignment_to_model(red, a, good));
  const std::vector<std::uint32_t> bad{0, 0, 0, 1};
  EXPECT_THROW(tw_assignment_to_model(red, a, bad), FormulaError);
}

TEST(TwReduction, SmoothedWireCannotFill) {
  const TwReduction red = build_tw_reduction(kFourClauses);
  TwConfiguration config;
  config.right = {false, false, false, false};  // x1 left: d_L of x1 is smoothed
  config.fill = {std::size_t{0}, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_THROW(realize_configuration(red, config), FormulaError);
}

TEST(StructuredSearch, SatisfiableReachesRho) {
  const TwReduction red = build_tw_reduction(kFourClauses);
  const StructuredResult r = structured_tw_search(red);
  EXPECT_EQ(r.density, red.rho);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(verify_model(red.graph, r.witness->model), r.witness->summary);
}

TEST(StructuredSearch, UnsatisfiableStaysBelowRho) {
  const CnfFormula f{4, {{pos(0)}, {neg(0)}, {pos(1)}, {pos(2)}}};
  const TwReduction red = build_tw_reduction(f);
  EXPECT_LT(structured_tw_search(red).density, red.rho);
}

TEST(StructuredSearch, NoClauses) {
  const TwReduction red = build_tw_reduction(CnfFormula{4, {}});
  EXPECT_EQ(red.graph.order(), 0u);
  EXPECT_EQ(structured_tw_search(red).density, Rational(0));
}

}  // namespace
}  // namespace densub
