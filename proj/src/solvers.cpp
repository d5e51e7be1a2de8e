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

#include "densub/solvers.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "densub/max_flow.hpp"

namespace densub {
namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const SolveLimits& limits)
      : limits_(limits), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                      limits.time_budget)) {}

  /// Counts one unit of work; false once the subset or time budget is spent.
  bool charge() {
    ++spent_;
    if (spent_ > limits_.max_subsets) return false;
    if ((spent_ & 0x3ff) == 0 && Clock::now() > deadline_) return false;
    return true;
  }

 private:
  const SolveLimits& limits_;
  Clock::time_point deadline_;
  std::uint64_t spent_ = 0;
};

std::vector<VertexId> subset_of(std::span<const VertexId> pool, std::uint64_t mask) {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1) out.push_back(pool[i]);
  }
  return out;
}

// Exists a subset S with ||S|| / |S| > p / q?  Returns S (possibly empty).
std::vector<VertexId> denser_than(const Graph& g, const Rational& c) {
  const std::size_t n = g.order();
  const std::int64_t m = static_cast<std::int64_t>(g.size());
  const std::int64_t p = c.num();
  const std::int64_t q = c.den();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  MaxFlow flow(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = g.vertices()[i];
    const auto deg = static_cast<std::int64_t>(g.degree(v));
    flow.add_edge(source, i, m * q);
    flow.add_edge(i, sink, m * q + 2 * p - deg * q);
    for (VertexId w : g.neighbors(v)) flow.add_edge(i, g.index_of(w), q);
  }
  const std::int64_t cut = flow.run(source, sink);
  std::vector<VertexId> side;
  if (cut < static_cast<std::int64_t>(n) * m * q) {
    auto reach = flow.source_side(source);
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i]) side.push_back(g.vertices()[i]);
    }
  }
  return side;
}

bool better(const Rational& density, const std::vector<VertexId>& nails, const Rational& best,
            const std::vector<VertexId>& best_nails) {
  if (best_nails.empty()) return true;
  if (density != best) return density > best;
  return nails < best_nails;
}

}  // namespace

NailFilter min_degree_filter(std::size_t k) {
  return [k](const Graph& g, VertexId v) { return g.degree(v) >= k; };
}

DepthMode depth_mode(Depth1Mode mode) {
  return mode == Depth1Mode::subdivision ? DepthMode::subdivision(1) : DepthMode::shallow(1);
}

std::size_t fixed_nails_edge_count(const Graph& g, std::span<const VertexId> nails,
                                   Depth1Mode mode) {
  AuxBipartite aux = build_aux_graph(g, nails, mode);
  auto matches = max_matching(aux.right.size(), aux.adjacency);
  std::size_t matched = static_cast<std::size_t>(
      std::count_if(matches.begin(), matches.end(), [](const auto& m) { return m.has_value(); }));
  return matched + aux.forced_pairs.size();
}

Solution densest_fixed_nails(const Graph& g, std::span<const VertexId> nails, Depth1Mode mode) {
  if (nails.empty()) throw Error("densest_fixed_nails: empty nail set");
  AuxBipartite aux = build_aux_graph(g, nails, mode);
  TopoMinorModel model;
  model.nails.assign(nails.begin(), nails.end());
  std::sort(model.nails.begin(), model.nails.end());
  model.nails.erase(std::unique(model.nails.begin(), model.nails.end()), model.nails.end());
  model.mode = depth_mode(mode);
  for (const NailPair& p : aux.forced_pairs) model.paths.push_back({p.a, p.b});
  for (const auto& [v, p] : max_bipartite_matching(aux)) model.paths.push_back({p.a, v, p.b});
  std::sort(model.paths.begin(), model.paths.end(), [](const Path& x, const Path& y) {
    return std::pair(x.front(), x.back()) < std::pair(y.front(), y.back());
  });
  Solution out;
  out.summary = verify_model(g, model);
  out.model = std::move(model);
  return out;
}

Solution densest_depth1_exact(const Graph& g, Depth1Mode mode, const NailFilter& filter,
                              const SolveLimits& limits) {
  std::vector<VertexId> pool;
  for (VertexId v : g.vertices()) {
    if (!filter || filter(g, v)) pool.push_back(v);
  }
  if (pool.empty()) throw Error("densest_depth1_exact: no candidate nails");
  if (pool.size() >= 63) throw BudgetExceeded<Solution>();
  const std::uint64_t subsets = (std::uint64_t{1} << pool.size()) - 1;
  if (g.order() > limits.max_vertices && subsets > limits.max_subsets) {
    throw BudgetExceeded<Solution>();
  }

  Budget budget(limits);
  Rational best;
  std::vector<VertexId> best_nails;
  for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
    if (!budget.charge()) {
      if (best_nails.empty()) throw BudgetExceeded<Solution>();
      throw BudgetExceeded<Solution>(densest_fixed_nails(g, best_nails, mode));
    }
    std::vector<VertexId> nails = subset_of(pool, mask);
    const auto k = static_cast<std::int64_t>(nails.size());
    // A nail set of size k carries at most k(k-1)/2 edges.
    if (!best_nails.empty() && Rational(k - 1, 2) < best) continue;
    Rational d(static_cast<std::int64_t>(fixed_nails_edge_count(g, nails, mode)), k);
    if (better(d, nails, best, best_nails)) {
      best = d;
      best_nails = std::move(nails);
    }
  }
  return densest_fixed_nails(g, best_nails, mode);
}

DenseSubgraph densest_subgraph(const Graph& g) {
  if (g.empty()) throw GraphError("density undefined for the empty graph");
  std::vector<Rational> candidates;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    for (std::size_t e = 0; e <= g.size(); ++e) {
      candidates.emplace_back(static_cast<std::int64_t>(e), static_cast<std::int64_t>(k));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // First candidate c with no subgraph denser than c; candidates[0] = 0.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (denser_than(g, candidates[mid]).empty()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  DenseSubgraph out;
  out.density = candidates[lo];
  if (lo == 0) {
    out.vertices = {g.vertices().front()};
  } else {
    out.vertices = denser_than(g, candidates[lo - 1]);
  }
  out.subgraph = induced_subgraph(g, out.vertices);
  return out;
}

BipartiteSubdivision dense_bipartite_subdivision(std::span<const VertexId> x_side,
                                                 std::span<const VertexId> y_side,
                                                 std::span<const Edge> edges, Rational target,
                                                 const SolveLimits& limits) {
  std::vector<VertexId> xs(x_side.begin(), x_side.end());
  std::vector<VertexId> ys(y_side.begin(), y_side.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  auto in = [](const std::vector<VertexId>& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
  };
  for (VertexId y : ys) {
    if (in(xs, y)) throw GraphError("vertex " + to_string(y) + " is on both sides");
  }
  std::vector<std::vector<std::size_t>> x_nbrs(xs.size());
  for (const Edge& e : edges) {
    VertexId x = e.u;
    VertexId y = e.v;
    if (in(ys, x) && in(xs, y)) std::swap(x, y);
    if (!in(xs, x) || !in(ys, y)) {
      throw GraphError("edge " + to_string(e) + " does not join X to Y");
    }
    auto xi = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    auto yi = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    x_nbrs[xi].push_back(yi);
  }
  for (auto& nb : x_nbrs) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  BipartiteSubdivision out;
  if (ys.empty()) return out;
  if (ys.size() >= 63) throw BudgetExceeded<BipartiteSubdivision>();

  auto evaluate = [&](std::uint64_t mask, bool keep_witness, BipartiteSubdivision& into) {
    const std::size_t k = ys.size();
    std::vector<std::size_t> pair_index(k * k, 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!(mask >> j & 1)) continue;
        pair_index[i * k + j] = pairs.size();
        pairs.emplace_back(i, j);
      }
    }
    std::vector<std::vector<std::size_t>> adj(xs.size());
    for (std::size_t x = 0; x < xs.size(); ++x) {
      const auto& nb = x_nbrs[x];
      for (std::size_t a = 0; a < nb.size(); ++a) {
        if (!(mask >> nb[a] & 1)) continue;
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          if (mask >> nb[b] & 1) adj[x].push_back(pair_index[nb[a] * k + nb[b]]);
        }
      }
      std::sort(adj[x].begin(), adj[x].end());
    }
    auto matches = max_matching(pairs.size(), adj);
    std::size_t matched = 0;
    into.x_prime.clear();
    into.assignment.clear();
    for (std::size_t x = 0; x < xs.size(); ++x) {
      if (!matches[x]) continue;
      ++matched;
      if (keep_witness) {
        auto [i, j] = pairs[*matches[x]];
        into.x_prime.push_back(xs[x]);
        into.assignment.emplace_back(xs[x], NailPair{ys[i], ys[j]});
      }
    }
    into.y_prime = subset_of(ys, mask);
    into.best_ratio = Rational(static_cast<std::int64_t>(matched),
                               static_cast<std::int64_t>(std::popcount(mask)));
  };

  Budget budget(limits);
  const std::uint64_t subsets = (std::uint64_t{1} << ys.size()) - 1;
  std::uint64_t best_mask = 0;
  BipartiteSubdivision scratch;
  for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
    if (!budget.charge()) {
      if (best_mask == 0) throw BudgetExceeded<BipartiteSubdivision>();
      evaluate(best_mask, true, out);
      out.feasible = out.best_ratio >= target;
      throw BudgetExceeded<BipartiteSubdivision>(out);
    }
    evaluate(mask, false, scratch);
    if (best_mask == 0 || scratch.best_ratio > out.best_ratio ||
        (scratch.best_ratio == out.best_ratio && scratch.y_prime < out.y_prime)) {
      best_mask = mask;
      out.best_ratio = scratch.best_ratio;
      out.y_prime = scratch.y_prime;
    }
  }
  evaluate(best_mask, true, out);
  out.feasible = out.best_ratio >= target;
  return out;
}

}  // namespace densub
