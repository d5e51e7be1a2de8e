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

#ifndef DENSUB_MAX_FLOW_HPP_
#define DENSUB_MAX_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace densub {

/// Dinic's algorithm on an integer-capacity directed network.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);

  /// After run(): nodes reachable from the source in the residual network,
  /// i.e. the source side of the unique inclusion-minimal minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t v, std::size_t sink, std::int64_t limit);

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace densub

#endif  // DENSUB_MAX_FLOW_HPP_
