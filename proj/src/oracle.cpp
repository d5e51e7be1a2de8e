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

#include "densub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace densub {
namespace {

using Clock = std::chrono::steady_clock;

// Dense re-indexing of a small graph with bitmask adjacency.
struct SmallGraph {
  explicit SmallGraph(const Graph& g) : ids(g.vertices().begin(), g.vertices().end()) {
    adj.assign(ids.size(), 0);
    for (const Edge& e : g.edges()) {
      auto a = g.index_of(e.u);
      auto b = g.index_of(e.v);
      adj[a] |= std::uint32_t{1} << b;
      adj[b] |= std::uint32_t{1} << a;
    }
  }

  std::vector<VertexId> ids;
  std::vector<std::uint32_t> adj;
};

class PathSystemSearch {
 public:
  PathSystemSearch(const SmallGraph& g, std::uint32_t nails, DepthMode mode, Clock::time_point deadline)
      : g_(g), nails_(nails), mode_(mode), deadline_(deadline) {
    for (std::size_t a = 0; a < g.ids.size(); ++a) {
      if (!(nails >> a & 1)) continue;
      for (std::size_t b = a + 1; b < g.ids.size(); ++b) {
        if (nails >> b & 1) pairs_.emplace_back(a, b);
      }
    }
  }

  void run() {
    std::vector<std::vector<std::size_t>> chosen;
    search(0, 0, chosen);
  }

  std::size_t best_count() const { return best_.size(); }
  const std::vector<std::vector<std::size_t>>& best_paths() const { return best_; }

 private:
  void search(std::size_t next_pair, std::uint32_t used, std::vector<std::vector<std::size_t>>& chosen) {
    if ((++nodes_ & 0xffff) == 0 && Clock::now() > deadline_) throw BudgetExceeded<Solution>();
    if (chosen.size() > best_.size()) best_ = chosen;
    if (next_pair == pairs_.size()) return;
    if (chosen.size() + (pairs_.size() - next_pair) <= best_.size()) return;
    auto [a, b] = pairs_[next_pair];
    std::vector<std::size_t> path{a};
    extend(next_pair, used, path, b, chosen);
    search(next_pair + 1, used, chosen);
  }

  // Grows `path` (currently ending in a nail or interior) towards `target`.
  void extend(std::size_t pair, std::uint32_t used, std::vector<std::size_t>& path, std::size_t target,
              std::vector<std::vector<std::size_t>>& chosen) {
    const std::size_t interior = path.size() - 1;
    const std::size_t last = path.back();
    if (g_.adj[last] >> target & 1 && mode_.admits(interior)) {
      path.push_back(target);
      chosen.push_back(path);
      search(pair + 1, used, chosen);
      chosen.pop_back();
      path.pop_back();
    }
    if (interior >= mode_.depth) return;
    std::uint32_t free = g_.adj[last] & ~nails_ & ~used;
    for (std::size_t v = 0; v < g_.ids.size(); ++v) {
      if (!(free >> v & 1)) continue;
      path.push_back(v);
      extend(pair, used | std::uint32_t{1} << v, path, target, chosen);
      path.pop_back();
    }
  }

  const SmallGraph& g_;
  std::uint32_t nails_;
  DepthMode mode_;
  Clock::time_point deadline_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::vector<std::size_t>> best_;
  std::uint64_t nodes_ = 0;
};

Solution to_solution(const Graph& g, const SmallGraph& sg, std::uint32_t nails,
                     const std::vector<std::vector<std::size_t>>& paths, DepthMode mode) {
  TopoMinorModel model;
  model.mode = mode;
  for (std::size_t i = 0; i < sg.ids.size(); ++i) {
    if (nails >> i & 1) model.nails.push_back(sg.ids[i]);
  }
  for (const auto& p : paths) {
    Path path;
    for (std::size_t i : p) path.push_back(sg.ids[i]);
    model.paths.push_back(std::move(path));
  }
  Solution out;
  out.summary = verify_model(g, model);
  out.model = std::move(model);
  return out;
}

Clock::time_point deadline_of(const SolveLimits& limits) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(limits.time_budget);
}

}  // namespace

Solution brute_force_fixed_nails(const Graph& g, std::span<const VertexId> nails, DepthMode mode,
                                 const SolveLimits& limits) {
  if (g.order() > std::min<std::size_t>(limits.max_vertices, 32)) throw BudgetExceeded<Solution>();
  if (nails.empty()) throw Error("brute_force_fixed_nails: empty nail set");
  SmallGraph sg(g);
  std::uint32_t mask = 0;
  for (VertexId v : nails) mask |= std::uint32_t{1} << g.index_of(v);
  PathSystemSearch search(sg, mask, mode, deadline_of(limits));
  search.run();
  return to_solution(g, sg, mask, search.best_paths(), mode);
}

Solution brute_force_densest(const Graph& g, DepthMode mode, const SolveLimits& limits) {
  if (g.empty()) throw GraphError("density undefined for the empty graph");
  if (g.order() > std::min<std::size_t>(limits.max_vertices, 24)) throw BudgetExceeded<Solution>();
  SmallGraph sg(g);
  const auto deadline = deadline_of(limits);
  const std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;

  Rational best;
  std::uint32_t best_mask = 0;
  std::vector<std::vector<std::size_t>> best_paths;
  std::vector<VertexId> best_ids;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    PathSystemSearch search(sg, mask, mode, deadline);
    search.run();
    Rational d(static_cast<std::int64_t>(search.best_count()), std::popcount(mask));
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < sg.ids.size(); ++i) {
      if (mask >> i & 1) ids.push_back(sg.ids[i]);
    }
    if (best_mask == 0 || d > best || (d == best && ids < best_ids)) {
      best = d;
      best_mask = mask;
      best_paths = search.best_paths();
      best_ids = std::move(ids);
    }
  }
  return to_solution(g, sg, best_mask, best_paths, mode);
}

}  // namespace densub
