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

#ifndef DENSUB_STRUCTURED_SEARCH_HPP_
#define DENSUB_STRUCTURED_SEARCH_HPP_

#include <optional>

#include "densub/rational.hpp"
#include "densub/solvers.hpp"
#include "densub/tw_reduction.hpp"

namespace densub {

struct StructuredResult {
  Rational density;
  /// Best configuration and its verified model; absent for zero clauses.
  std::optional<TwConfiguration> configuration;
  std::optional<Solution> witness;
};

/// Maximum 1-STM density over the structured configuration family of a
/// treewidth reduction: every consistent left/right configuration of the
/// variable gadgets (2^actual_vars of them) and, per clause, every gap in
/// the tour chain that some free literal wire can close. The nail set is
/// A u B u R throughout. The best model is re-verified before returning.
/// Zero clauses leave an empty graph and give 0/1.
StructuredResult structured_tw_search(const TwReduction& red, const SolveLimits& limits = {});

}  // namespace densub

#endif  // DENSUB_STRUCTURED_SEARCH_HPP_
