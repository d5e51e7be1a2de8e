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

#include "densub/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

long TreeDecomposition::width() const {
  long w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<long>(bag.size()) - 1);
  return w;
}

TreeDecomposition cop_tree_decomposition(const TwReduction& red) {
  TreeDecomposition t;
  if (red.m == 0) {
    t.bags.emplace_back();
    return t;
  }
  auto column = [&](std::size_t col, std::vector<VertexId>& out) {
    for (std::size_t row = 0; row < red.side; ++row) out.push_back(red.grid[row][col - 1]);
  };

  std::vector<std::size_t> base(red.m + 1);
  for (std::size_t i = 1; i <= red.m; ++i) {
    const ClauseGadget& cg = red.clauses[i - 1];
    std::vector<VertexId> bag;
    for (std::size_t col : {std::size_t{1}, red.m, red.cyclic_column(i, -1), i, red.cyclic_column(i, +1)}) {
      column(col, bag);
    }
    bag.insert(bag.end(), cg.a.begin(), cg.a.end());
    bag.insert(bag.end(), cg.b.begin(), cg.b.end());
    base[i] = t.bags.size();
    t.bags.push_back(sorted_unique(std::move(bag)));
    if (i > 1) t.tree_edges.emplace_back(base[i - 1], base[i]);
  }
  auto leaf = [&](std::size_t col, std::vector<VertexId> bag) {
    t.tree_edges.emplace_back(base[col], t.bags.size());
    t.bags.push_back(sorted_unique(std::move(bag)));
  };

  for (std::size_t l = 0; l < red.n; ++l) {
    for (std::size_t col = 1; col <= red.m; ++col) {
      const DecisionGadget& g = red.variable_gadgets[l][col - 1];
      std::vector<VertexId> bag{g.left, g.center, g.right, g.attached[0], g.attached[1], g.attached[2]};
      const ClauseGadget& cg = red.clauses[col - 1];
      for (const LiteralWire& w : cg.wires) {
        if (w.literal.var != l) continue;
        auto [j, k] = cg.pair_of_variable[l];
        bag.insert(bag.end(), {w.relay, cg.a[j], cg.b[k]});
      }
      leaf(col, std::move(bag));
    }
  }
  for (std::size_t i = 1; i <= red.m; ++i) {
    const ClauseGadget& cg = red.clauses[i - 1];
    for (std::size_t l = 0; l < red.n; ++l) {
      const VertexId x = red.sequence_vertex(l, i);
      auto [j, k] = cg.pair_of_variable[l];
      const Connector& c = cg.connectors[l];
      leaf(i, {x, c.to_a[0], c.to_a[1], cg.a[j]});
      leaf(i, {x, c.to_b[0], c.to_b[1], cg.b[k]});
    }
    for (const DecisionGadget& g : cg.chain) {
      leaf(i, {g.left, g.center, g.right, g.attached[0], g.attached[1], g.attached[2]});
    }
  }
  return t;
}

long verify_tree_decomposition(const Graph& g, const TreeDecomposition& t) {
  const std::size_t k = t.bags.size();
  if (k == 0) {
    if (!g.empty()) throw GraphError("decomposition has no bags");
    return -1;
  }
  UnionFind uf(k);
  if (t.tree_edges.size() != k - 1) throw GraphError("tree edges do not form a tree");
  for (auto [a, b] : t.tree_edges) {
    if (a >= k || b >= k || !uf.unite(a, b)) throw GraphError("tree edges do not form a tree");
  }

  std::vector<std::vector<VertexId>> bags;
  for (const auto& bag : t.bags) bags.push_back(sorted_unique(bag));
  std::vector<std::vector<std::size_t>> holders(g.order());
  for (std::size_t i = 0; i < k; ++i) {
    for (VertexId v : bags[i]) {
      if (!g.has_vertex(v)) throw GraphError("bag " + std::to_string(i) + " holds unknown vertex " + to_string(v));
      holders[g.index_of(v)].push_back(i);
    }
  }
  for (std::size_t vi = 0; vi < g.order(); ++vi) {
    if (holders[vi].empty()) throw GraphError("vertex " + to_string(g.vertices()[vi]) + " not covered");
  }
  for (const Edge& e : g.edges()) {
    const auto& hu = holders[g.index_of(e.u)];
    const auto& hv = holders[g.index_of(e.v)];
    std::vector<std::size_t> common;
    std::set_intersection(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(common));
    if (common.empty()) throw GraphError("edge " + to_string(e) + " not covered");
  }
  // Bags holding v induce a forest inside the tree; it is connected iff it
  // has exactly |bags| - 1 edges.
  std::vector<std::size_t> inner(g.order(), 0);
  for (auto [a, b] : t.tree_edges) {
    const auto& ba = bags[a];
    const auto& bb = bags[b];
    std::vector<VertexId> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (VertexId v : common) ++inner[g.index_of(v)];
  }
  for (std::size_t vi = 0; vi < g.order(); ++vi) {
    if (inner[vi] + 1 != holders[vi].size()) {
      throw GraphError("bags containing vertex " + to_string(g.vertices()[vi]) + " are not connected");
    }
  }
  long width = -1;
  for (const auto& bag : bags) width = std::max(width, static_cast<long>(bag.size()) - 1);
  return width;
}

}  // namespace densub
