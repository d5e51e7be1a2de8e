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

#ifndef DENSUB_DOCUMENTS_HPP_
#define DENSUB_DOCUMENTS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "densub/cnf.hpp"
#include "densub/graph.hpp"
#include "densub/model.hpp"
#include "densub/parity_reduction.hpp"
#include "densub/tree_decomposition.hpp"
#include "densub/tw_reduction.hpp"

namespace densub {

// All documents are line oriented. The first non-comment line is
// "format <name> <version>"; '#' starts a comment line.

/// Graph plus labels, provenance and free-form metadata:
///
///   format densub-graph 1
///   meta target 15/7
///   clause 1 2 3
///   vertex 0 apex apex
///   vertex 7 - C1
///   edge 0 7
struct LabeledGraphDocument {
  Graph graph;
  std::map<VertexId, std::string> provenance;
  std::vector<std::pair<std::string, std::string>> metadata;  // in emission order
  /// Embedded source formula, DIMACS literals without the terminating 0.
  std::vector<std::vector<long long>> clauses;

  /// Value of the first metadata entry with this key; throws ParseError if absent.
  const std::string& meta(std::string_view key) const;
  bool has_meta(std::string_view key) const;

  friend bool operator==(const LabeledGraphDocument&, const LabeledGraphDocument&) = default;
};

inline constexpr int kGraphFormatVersion = 1;
inline constexpr int kModelFormatVersion = 1;
inline constexpr int kTreeDecompFormatVersion = 1;

std::string emit_graph_document(const LabeledGraphDocument& doc);
LabeledGraphDocument load_graph_document(std::string_view text);

///   format densub-model 1
///   mode shallow 1
///   nails 0 3 5
///   path 0 1 3
std::string emit_model_document(const TopoMinorModel& m);
TopoMinorModel load_model_document(std::string_view text);

///   format densub-treedecomp 1
///   bag 0 1 2
///   tree 0 1
std::string emit_tree_decomposition(const TreeDecomposition& t);
TreeDecomposition load_tree_decomposition(std::string_view text);

/// Metadata: kind parity, r, mode, target, vars, source-hash; the clauses of
/// the (positive) source formula are embedded.
LabeledGraphDocument to_document(const ReductionOutput& red);
/// Metadata: kind treewidth, n, m, vars (before padding), target,
/// source-hash; the padded source formula is embedded.
LabeledGraphDocument to_document(const TwReduction& red);

/// Source formula embedded in a reduction document; checks the recorded hash.
CnfFormula embedded_formula(const LabeledGraphDocument& doc);

}  // namespace densub

#endif  // DENSUB_DOCUMENTS_HPP_
