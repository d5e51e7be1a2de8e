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

#include <random>

#include "densub/dimacs.hpp"
#include "densub/documents.hpp"
#include "densub/errors.hpp"
#include "test_util.hpp"

namespace densub {
namespace {

void expect_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_dimacs_cnf(text);
    FAIL() << "expected: " << fragment;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Dimacs, Basic) {
  const CnfFormula f = parse_dimacs_cnf("p cnf 2 1\n1 -2 0\n");
  EXPECT_EQ(f.num_vars, 2u);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], (std::vector<Literal>{{0, false}, {1, true}}));
}

TEST(Dimacs, CommentsAnywhere) {
  const CnfFormula f = parse_dimacs_cnf("c head\np cnf 3 2\nc mid\n1 2\n3 0\nc between\n-3 0\n");
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0].size(), 3u);
}

TEST(Dimacs, Errors) {
  expect_parse_error("p cnf 2 2\n1 -2 0\n", 3, "header declares 2 clauses, found 1");
  expect_parse_error("p cnf x 1\n1 0\n", 1, "malformed header");
  expect_parse_error("p dnf 2 1\n1 0\n", 1, "malformed header");
  expect_parse_error("p cnf 2 1\n1 3 0\n", 2, "out of range");
  expect_parse_error("p cnf 2 1\n\n1 2\n", 3, "missing terminator");
  expect_parse_error("1 2 0\n", 1, "clause before header");
  expect_parse_error("c nothing\n", 2, "missing header");
}

TEST(Dimacs, EmitParsesBack) {
  const CnfFormula f{3, {{{0, false}, {2, true}}, {{1, true}}}};
  EXPECT_EQ(emit_dimacs_cnf(f), "p cnf 3 2\n1 -3 0\n-2 0\n");
  EXPECT_EQ(parse_dimacs_cnf(emit_dimacs_cnf(f)), f);
  EXPECT_EQ(formula_hash(f), formula_hash(parse_dimacs_cnf(emit_dimacs_cnf(f))));
  EXPECT_EQ(formula_hash_hex(f).size(), 16u);
  CnfFormula g = f;
  g.clauses[1][0].negated = false;
  EXPECT_NE(formula_hash(f), formula_hash(g));
}

TEST(GraphDocument, RoundTripsReductions) {
  const Positive1in3Formula phi{3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  for (std::size_t r : {1u, 2u, 3u}) {
    const LabeledGraphDocument doc = to_document(build_parity_reduction(phi, r));
    EXPECT_EQ(doc.meta("target"), "15/7");
    const LabeledGraphDocument back = load_graph_document(emit_graph_document(doc));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(embedded_formula(back), to_cnf(phi));
  }
  const CnfFormula f{4, {{{0, false}, {1, true}}, {{2, false}}}};
  const LabeledGraphDocument tw = to_document(build_tw_reduction(f));
  EXPECT_EQ(load_graph_document(emit_graph_document(tw)), tw);
  EXPECT_EQ(tw.meta("target"), "8/3");
  EXPECT_EQ(embedded_formula(tw), f);
}

TEST(GraphDocument, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    LabeledGraphDocument doc;
    doc.graph = testing::random_graph(rng, trial % 12, 0.3);
    doc.metadata = {{"note", "random graph " + std::to_string(trial)}};
    EXPECT_EQ(load_graph_document(emit_graph_document(doc)), doc);
  }
}

TEST(GraphDocument, EmptyDocument) {
  const LabeledGraphDocument doc = load_graph_document("format densub-graph 1\n");
  EXPECT_TRUE(doc.graph.empty());
  EXPECT_EQ(doc.graph, Graph());
}

TEST(GraphDocument, Errors) {
  EXPECT_THROW(load_graph_document("format densub-graph 2\n"), ParseError);
  EXPECT_THROW(load_graph_document("format densub-model 1\n"), ParseError);
  EXPECT_THROW(load_graph_document(""), ParseError);
  try {
    load_graph_document("format densub-graph 1\nvertex 0\nedge 0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("undeclared vertex 5"), std::string::npos);
  }
  EXPECT_THROW(load_graph_document("format densub-graph 1\nvertex 0 purple\n"), ParseError);
  EXPECT_THROW(load_graph_document("format densub-graph 1\nvertex 0\nvertex 0\n"), ParseError);
  EXPECT_THROW(load_graph_document("format densub-graph 1\nvertex 0\nvertex 1\nedge 0 1\nedge 1 0\n"), ParseError);
  EXPECT_THROW(load_graph_document("format densub-graph 1\nwidget 3\n"), ParseError);
}

TEST(GraphDocument, CorruptedFormulaHash) {
  const Positive1in3Formula phi{3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  LabeledGraphDocument doc = to_document(build_parity_reduction(phi, 1));
  doc.clauses[0] = {1, 2, -3};
  EXPECT_THROW(embedded_formula(doc), ParseError);
}

TEST(ModelDocument, RoundTrip) {
  const TopoMinorModel m{{VertexId{0}, VertexId{2}, VertexId{4}},
                         {{VertexId{0}, VertexId{1}, VertexId{2}}, {VertexId{4}, VertexId{0}}},
                         DepthMode::subdivision(1)};
  EXPECT_EQ(load_model_document(emit_model_document(m)), m);
  EXPECT_THROW(load_model_document("format densub-model 9\nmode shallow 1\nnails 0\n"), ParseError);
  EXPECT_THROW(load_model_document("format densub-model 1\nmode deep 1\nnails 0\n"), ParseError);
  EXPECT_THROW(load_model_document("format densub-model 1\nnails 0\n"), ParseError);
}

TEST(ModelDocument, WrongGraphIsAModelError) {
  const TopoMinorModel m = load_model_document("format densub-model 1\nmode shallow 1\nnails 0 2\npath 0 1 2\n");
  EXPECT_THROW(verify_model(testing::complete_graph(2), m), ModelError);
  EXPECT_THROW(verify_model(testing::from_edges(3, {{0, 1}, {0, 2}}), m), ModelError);
  EXPECT_EQ(verify_model(testing::path_graph(3), m).density, Rational(1, 2));
}

TEST(TreeDecompositionDocument, RoundTrip) {
  const TwReduction red = build_tw_reduction(CnfFormula{4, {{{0, false}}, {{1, true}}, {{2, false}}}});
  const TreeDecomposition t = cop_tree_decomposition(red);
  EXPECT_EQ(load_tree_decomposition(emit_tree_decomposition(t)), t);
  const TreeDecomposition empty{{{}}, {}};
  EXPECT_EQ(load_tree_decomposition(emit_tree_decomposition(empty)), empty);
  EXPECT_THROW(load_tree_decomposition("format densub-treedecomp 1\nbag 0\ntree 0 1\n"), ParseError);
  EXPECT_THROW(load_tree_decomposition("format densub-treedecomp 1\nbag 0 0\n"), ParseError);
}

}  // namespace
}  // namespace densub
