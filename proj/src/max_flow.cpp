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

#include "densub/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace densub {

MaxFlow::MaxFlow(std::size_t nodes) : arcs_(nodes), level_(nodes), next_(nodes) {}

void MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  arcs_[from].push_back({to, arcs_[to].size(), capacity});
  arcs_[to].push_back({from, arcs_[from].size() - 1, 0});
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  std::queue<std::size_t> queue;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : arcs_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t v, std::size_t sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (std::size_t& i = next_[v]; i < arcs_[v].size(); ++i) {
    Arc& a = arcs_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    std::int64_t pushed = push(a.to, sink, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      arcs_[a.to][a.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (std::int64_t f = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(std::size_t source) const {
  std::vector<bool> seen(arcs_.size(), false);
  std::queue<std::size_t> queue;
  seen[source] = true;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : arcs_[v]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace densub
