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

#include "densub/structured_search.hpp"

#include <chrono>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::optional<std::size_t> first_free_wire(const TwReduction& red, std::size_t clause, const std::vector<bool>& right) {
  const auto& wires = red.clauses[clause].wires;
  for (std::size_t w = 0; w < wires.size(); ++w) {
    const Literal& lit = wires[w].literal;
    // d_L is free under the right configuration, d_R under the left one.
    if (right[lit.var] != lit.negated) return w;
  }
  return std::nullopt;
}

}  // namespace

StructuredResult structured_tw_search(const TwReduction& red, const SolveLimits& limits) {
  StructuredResult result{Rational(0), std::nullopt, std::nullopt};
  if (red.m == 0) return result;
  if (red.actual_vars >= 63 || (std::uint64_t{1} << red.actual_vars) > limits.max_subsets) {
    throw SearchBudgetError();
  }
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t nails = static_cast<std::int64_t>(3 * red.m * red.side);
  const std::size_t fixed = red.m * (2 * red.n + red.n - 1);

  std::optional<std::size_t> best_count;
  TwConfiguration best;
  std::vector<bool> right(red.n, false);
  const std::uint64_t total = std::uint64_t{1} << red.actual_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & 1023) == 1023 && std::chrono::steady_clock::now() - start > limits.time_budget) {
      throw SearchBudgetError();
    }
    for (std::size_t v = 0; v < red.actual_vars; ++v) right[v] = (mask >> v) & 1;
    TwConfiguration config{right, std::vector<std::optional<std::size_t>>(red.m)};
    std::size_t count = fixed + variable_cycle_paths(red, right).size();
    for (std::size_t i = 0; i < red.m; ++i) {
      config.fill[i] = first_free_wire(red, i, right);
      if (config.fill[i]) ++count;
    }
    if (!best_count || count > *best_count) {
      best_count = count;
      best = std::move(config);
    }
  }

  TopoMinorModel model = realize_configuration(red, best);
  MinorSummary summary = verify_model(red.graph, model);
  if (summary.edge_count != *best_count || summary.density != Rational(static_cast<std::int64_t>(*best_count), nails)) {
    throw Error("structured search count disagrees with the verified model");
  }
  result.density = summary.density;
  result.configuration = std::move(best);
  result.witness = Solution{std::move(summary), std::move(model)};
  return result;
}

}  // namespace densub
