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

#include "densub/matching.hpp"

#include <algorithm>

namespace densub {
namespace {

class Augmenter {
 public:
  Augmenter(std::size_t right_count, const std::vector<std::vector<std::size_t>>& adjacency)
      : adjacency_(adjacency),
        match_right_(right_count),
        stamp_(right_count, 0) {}

  bool augment(std::size_t left) {
    ++round_;
    return visit(left);
  }

  std::vector<std::optional<std::size_t>> left_matches() const {
    std::vector<std::optional<std::size_t>> out(adjacency_.size());
    for (std::size_t r = 0; r < match_right_.size(); ++r) {
      if (match_right_[r]) out[*match_right_[r]] = r;
    }
    return out;
  }

 private:
  bool visit(std::size_t left) {
    for (std::size_t r : adjacency_[left]) {
      if (stamp_[r] == round_) continue;
      stamp_[r] = round_;
      if (!match_right_[r] || visit(*match_right_[r])) {
        match_right_[r] = left;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<std::optional<std::size_t>> match_right_;
  std::vector<std::size_t> stamp_;
  std::size_t round_ = 0;
};

}  // namespace

AuxBipartite build_aux_graph(const Graph& g, std::span<const VertexId> nail_span, Depth1Mode mode) {
  std::vector<VertexId> nails(nail_span.begin(), nail_span.end());
  std::sort(nails.begin(), nails.end());
  nails.erase(std::unique(nails.begin(), nails.end()), nails.end());
  for (VertexId x : nails) g.index_of(x);

  AuxBipartite aux;
  const std::size_t k = nails.size();
  // pair_index[i * k + j] for i < j, or npos for forced pairs.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pair_index(k * k, npos);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      NailPair p{nails[i], nails[j]};
      if (mode == Depth1Mode::shallow && g.has_edge(p.a, p.b)) {
        aux.forced_pairs.push_back(p);
        continue;
      }
      pair_index[i * k + j] = aux.right.size();
      aux.right.push_back(p);
    }
  }

  for (VertexId v : g.vertices()) {
    if (std::binary_search(nails.begin(), nails.end(), v)) continue;
    std::vector<std::size_t> nail_nbrs;
    for (VertexId w : g.neighbors(v)) {
      auto it = std::lower_bound(nails.begin(), nails.end(), w);
      if (it != nails.end() && *it == w) nail_nbrs.push_back(static_cast<std::size_t>(it - nails.begin()));
    }
    std::vector<std::size_t> adj;
    for (std::size_t a = 0; a < nail_nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nail_nbrs.size(); ++b) {
        std::size_t idx = pair_index[nail_nbrs[a] * k + nail_nbrs[b]];
        if (idx != npos) adj.push_back(idx);
      }
    }
    std::sort(adj.begin(), adj.end());
    aux.left.push_back(v);
    aux.adjacency.push_back(std::move(adj));
  }
  return aux;
}

std::vector<std::optional<std::size_t>> max_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adjacency) {
  Augmenter augmenter(right_count, adjacency);
  for (std::size_t left = 0; left < adjacency.size(); ++left) augmenter.augment(left);
  return augmenter.left_matches();
}

std::vector<std::pair<VertexId, NailPair>> max_bipartite_matching(const AuxBipartite& b) {
  auto matches = max_matching(b.right.size(), b.adjacency);
  std::vector<std::pair<VertexId, NailPair>> out;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (matches[i]) out.emplace_back(b.left[i], b.right[*matches[i]]);
  }
  return out;
}

}  // namespace densub
