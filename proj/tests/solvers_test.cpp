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

#include <bit>
#include <functional>
#include <set>
#include <random>

#include "densub/errors.hpp"
#include "densub/oracle.hpp"
#include "densub/solvers.hpp"
#include "test_util.hpp"

namespace densub {
namespace {

VertexId V(std::uint32_t i) { return VertexId{i}; }

/// K4 with every edge subdivided once; originals are 0..3.
Graph subdivided_k4() {
  Graph g = testing::complete_graph(4);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = a + 1; b < 4; ++b) g = subdivide_edge(g, Edge::of(V(a), V(b)), 1);
  }
  return g;
}

TEST(FixedNails, SubdividedK4) {
  const Graph g = subdivided_k4();
  const std::vector<VertexId> nails{V(0), V(1), V(2), V(3)};
  for (Depth1Mode mode : {Depth1Mode::subdivision, Depth1Mode::shallow}) {
    const Solution s = densest_fixed_nails(g, nails, mode);
    EXPECT_EQ(s.summary.density, Rational(3, 2));
    EXPECT_EQ(verify_model(g, s.model), s.summary);
  }
  EXPECT_THROW(densest_fixed_nails(g, {}, Depth1Mode::shallow), Error);
}

TEST(FixedNails, ShallowKeepsDirectEdges) {
  const Graph k5 = testing::complete_graph(5);
  const std::vector<VertexId> nails{V(0), V(1), V(2), V(3)};
  // Six direct edges plus nothing left for vertex 4 to subdivide.
  EXPECT_EQ(densest_fixed_nails(k5, nails, Depth1Mode::shallow).summary.edge_count, 6u);
  // Only vertex 4 can carry a path in subdivision mode.
  EXPECT_EQ(densest_fixed_nails(k5, nails, Depth1Mode::subdivision).summary.edge_count, 1u);
  EXPECT_EQ(fixed_nails_edge_count(k5, nails, Depth1Mode::subdivision), 1u);
}

TEST(Depth1Exact, SubdividedK4) {
  const Graph g = subdivided_k4();
  EXPECT_EQ(densest_depth1_exact(g, Depth1Mode::subdivision).summary.density, Rational(3, 2));
  EXPECT_EQ(densest_depth1_exact(g, Depth1Mode::shallow, min_degree_filter(3)).summary.density, Rational(3, 2));
}

TEST(Depth1Exact, CompleteGraphs) {
  // K5 as a 1/2-STM of itself: 10/5.
  EXPECT_EQ(densest_depth1_exact(testing::complete_graph(5), Depth1Mode::shallow).summary.density, Rational(2));
  // Petersen: no vertex pair is joined through a common neighbour twice.
  EXPECT_EQ(densest_depth1_exact(testing::petersen_graph(), Depth1Mode::shallow).summary.density,
            Rational(3, 2));
}

TEST(Depth1Exact, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 7, 0.2 + 0.1 * (trial % 6));
    for (Depth1Mode mode : {Depth1Mode::subdivision, Depth1Mode::shallow}) {
      const Solution fast = densest_depth1_exact(g, mode);
      const Solution slow = brute_force_densest(g, depth_mode(mode));
      EXPECT_EQ(fast.summary.density, slow.summary.density) << "trial " << trial;
      EXPECT_EQ(verify_model(g, fast.model), fast.summary);
      EXPECT_EQ(verify_model(g, slow.model), slow.summary);
    }
  }
}

TEST(Depth1Exact, FixedNailsMatchBruteForce) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + trial % 6, 0.5);
    std::vector<VertexId> nails;
    for (VertexId v : g.vertices()) {
      if (rng() % 2) nails.push_back(v);
    }
    if (nails.empty()) nails.push_back(g.vertices()[0]);
    for (Depth1Mode mode : {Depth1Mode::subdivision, Depth1Mode::shallow}) {
      EXPECT_EQ(densest_fixed_nails(g, nails, mode).summary.edge_count,
                brute_force_fixed_nails(g, nails, depth_mode(mode)).summary.edge_count);
    }
  }
}

TEST(Depth1Exact, BudgetCarriesBestSoFar) {
  SolveLimits limits;
  limits.max_subsets = 3;
  try {
    densest_depth1_exact(testing::complete_graph(6), Depth1Mode::shallow, {}, limits);
    FAIL();
  } catch (const BudgetExceeded<Solution>& e) {
    ASSERT_TRUE(e.has_best());
    const Graph k6 = testing::complete_graph(6);
    EXPECT_EQ(verify_model(k6, e.best().model), e.best().summary);
  }
}

TEST(DensestSubgraph, PetersenAndCompleteGraphs) {
  EXPECT_EQ(densest_subgraph(testing::petersen_graph()).density, Rational(3, 2));
  EXPECT_EQ(densest_subgraph(testing::complete_graph(6)).density, Rational(5, 2));
  EXPECT_EQ(densest_subgraph(testing::complete_graph(1)).density, Rational(0));
}

TEST(DensestSubgraph, K4WithPendant) {
  const Graph g = testing::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const DenseSubgraph ds = densest_subgraph(g);
  EXPECT_EQ(ds.density, Rational(3, 2));
  EXPECT_EQ(ds.vertices, (std::vector<VertexId>{V(0), V(1), V(2), V(3)}));
  EXPECT_EQ(density(ds.subgraph), ds.density);
}

TEST(DensestSubgraph, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10, 0.15 + 0.1 * (trial % 7));
    const DenseSubgraph ds = densest_subgraph(g);
    EXPECT_EQ(ds.density, testing::subset_densest(g)) << "trial " << trial;
    EXPECT_EQ(density(ds.subgraph), ds.density);
    EXPECT_EQ(ds.subgraph, induced_subgraph(g, ds.vertices));
  }
}

/// Best |X'|/|Y'| by trying every Y' and every injective smoothing of X.
Rational bipartite_oracle(const Graph& g, const std::vector<VertexId>& xs, const std::vector<VertexId>& ys) {
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << ys.size()); ++mask) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t a = 0; a < ys.size(); ++a) {
        for (std::size_t b = a + 1; b < ys.size(); ++b) {
          if ((mask >> a & 1) && (mask >> b & 1) && g.has_edge(xs[i], ys[a]) && g.has_edge(xs[i], ys[b])) {
            options[i].emplace_back(a, b);
          }
        }
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::function<std::size_t(std::size_t)> go = [&](std::size_t i) -> std::size_t {
      if (i == xs.size()) return 0;
      std::size_t b = go(i + 1);
      for (auto p : options[i]) {
        if (used.count(p)) continue;
        used.insert(p);
        b = std::max(b, 1 + go(i + 1));
        used.erase(p);
      }
      return b;
    };
    best = std::max(best, Rational(static_cast<std::int64_t>(go(0)), std::popcount(mask)));
  }
  return best;
}

TEST(BipartiteSubdivision, SubdividedK4) {
  const Graph g = subdivided_k4();
  std::vector<VertexId> xs, ys;
  for (VertexId v : g.vertices()) (raw(v) < 4 ? ys : xs).push_back(v);
  const auto yes = dense_bipartite_subdivision(xs, ys, g.edges(), Rational(3, 2));
  EXPECT_TRUE(yes.feasible);
  EXPECT_EQ(yes.best_ratio, Rational(3, 2));
  EXPECT_EQ(yes.assignment.size(), 6u);
  const auto no = dense_bipartite_subdivision(xs, ys, g.edges(), Rational(2));
  EXPECT_FALSE(no.feasible);
}

TEST(BipartiteSubdivision, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t nx = 1 + rng() % 5;
    const std::uint32_t ny = 1 + rng() % 5;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t x = 0; x < nx; ++x) {
      for (std::uint32_t y = 0; y < ny; ++y) {
        if (rng() % 2) es.emplace_back(x, nx + y);
      }
    }
    const Graph g = testing::from_edges(nx + ny, es);
    std::vector<VertexId> xs, ys;
    for (VertexId v : g.vertices()) (raw(v) < nx ? xs : ys).push_back(v);
    const auto r = dense_bipartite_subdivision(xs, ys, g.edges(), Rational(1));
    EXPECT_EQ(r.best_ratio, bipartite_oracle(g, xs, ys)) << "trial " << trial;
    EXPECT_EQ(r.feasible, r.best_ratio >= Rational(1));
  }
}

}  // namespace
}  // namespace densub
