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

#include "densub/documents.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "densub/dimacs.hpp"
#include "densub/errors.hpp"

namespace densub {
namespace {

struct Line {
  std::size_t number = 0;
  std::string keyword;
  std::vector<std::string> args;
  std::string rest;  // text after the keyword, trimmed
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> read_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (line.empty() || line.front() == '#') continue;
    Line l;
    l.number = number;
    std::istringstream in(line);
    in >> l.keyword;
    l.rest = trim(std::string_view(line).substr(l.keyword.size()));
    for (std::string tok; in >> tok;) l.args.push_back(tok);
    out.push_back(std::move(l));
  }
  return out;
}

template <class T>
T number(const Line& line, const std::string& tok) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a number, got '" + tok + "'");
  }
  return value;
}

VertexId vertex_arg(const Line& line, const std::string& tok) {
  return VertexId{number<std::uint32_t>(line, tok)};
}

/// Checks the format line and returns the remaining lines.
std::vector<Line> open_document(std::string_view text, std::string_view name, int version) {
  auto lines = read_lines(text);
  if (lines.empty() || lines[0].keyword != "format" || lines[0].args.size() != 2) {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "missing format line");
  }
  if (lines[0].args[0] != name) {
    throw ParseError(lines[0].number, "expected a " + std::string(name) + " document, got " + lines[0].args[0]);
  }
  if (lines[0].args[1] != std::to_string(version)) {
    throw ParseError(lines[0].number, "unsupported " + std::string(name) + " version " + lines[0].args[1]);
  }
  lines.erase(lines.begin());
  return lines;
}

[[noreturn]] void unknown(const Line& line) {
  throw ParseError(line.number, "unknown record '" + line.keyword + "'");
}

std::string join_ids(std::span<const VertexId> ids) {
  std::string out;
  for (VertexId v : ids) out += ' ' + to_string(v);
  return out;
}

std::vector<std::vector<long long>> signed_clauses(const CnfFormula& f) {
  std::vector<std::vector<long long>> out;
  for (const auto& clause : f.clauses) {
    std::vector<long long> c;
    for (const Literal& l : clause) c.push_back(l.negated ? -static_cast<long long>(l.var + 1) : l.var + 1);
    out.push_back(std::move(c));
  }
  return out;
}

LabeledGraphDocument base_document(const Graph& g, const std::map<VertexId, std::string>& provenance) {
  LabeledGraphDocument doc;
  doc.graph = g;
  doc.provenance = provenance;
  return doc;
}

}  // namespace

bool LabeledGraphDocument::has_meta(std::string_view key) const {
  return std::any_of(metadata.begin(), metadata.end(), [&](const auto& kv) { return kv.first == key; });
}

const std::string& LabeledGraphDocument::meta(std::string_view key) const {
  for (const auto& kv : metadata) {
    if (kv.first == key) return kv.second;
  }
  throw ParseError(0, "document has no '" + std::string(key) + "' metadata");
}

std::string emit_graph_document(const LabeledGraphDocument& doc) {
  std::ostringstream out;
  out << "format densub-graph " << kGraphFormatVersion << '\n';
  for (const auto& [key, value] : doc.metadata) out << "meta " << key << ' ' << value << '\n';
  for (const auto& clause : doc.clauses) {
    out << "clause";
    for (long long lit : clause) out << ' ' << lit;
    out << '\n';
  }
  for (VertexId v : doc.graph.vertices()) {
    out << "vertex " << raw(v);
    auto role = doc.graph.role(v);
    auto prov = doc.provenance.find(v);
    if (role || prov != doc.provenance.end()) out << ' ' << (role ? std::string(to_string(*role)) : "-");
    if (prov != doc.provenance.end()) out << ' ' << prov->second;
    out << '\n';
  }
  for (const Edge& e : doc.graph.edges()) out << "edge " << raw(e.u) << ' ' << raw(e.v) << '\n';
  return out.str();
}

LabeledGraphDocument load_graph_document(std::string_view text) {
  LabeledGraphDocument doc;
  std::vector<VertexId> vertices;
  std::set<VertexId> declared;
  std::vector<Edge> edges;
  std::map<VertexId, Role> roles;
  for (const Line& line : open_document(text, "densub-graph", kGraphFormatVersion)) {
    if (line.keyword == "meta") {
      if (line.args.empty()) throw ParseError(line.number, "meta record needs a key");
      doc.metadata.emplace_back(line.args[0], trim(std::string_view(line.rest).substr(line.args[0].size())));
    } else if (line.keyword == "clause") {
      std::vector<long long> clause;
      for (const auto& tok : line.args) clause.push_back(number<long long>(line, tok));
      doc.clauses.push_back(std::move(clause));
    } else if (line.keyword == "vertex") {
      if (line.args.empty()) throw ParseError(line.number, "vertex record needs an id");
      const VertexId v = vertex_arg(line, line.args[0]);
      if (!declared.insert(v).second) throw ParseError(line.number, "duplicate vertex " + to_string(v));
      vertices.push_back(v);
      if (line.args.size() >= 2 && line.args[1] != "-") {
        auto role = role_from_string(line.args[1]);
        if (!role) throw ParseError(line.number, "unknown role '" + line.args[1] + "'");
        roles[v] = *role;
      }
      if (line.args.size() >= 3) {
        std::string_view rest = line.rest;
        for (int skip = 0; skip < 2; ++skip) {
          rest.remove_prefix(rest.find_first_not_of(" \t"));
          rest.remove_prefix(std::min(rest.size(), rest.find_first_of(" \t")));
        }
        doc.provenance[v] = trim(rest);
      }
    } else if (line.keyword == "edge") {
      if (line.args.size() != 2) throw ParseError(line.number, "edge record needs two ids");
      const VertexId a = vertex_arg(line, line.args[0]);
      const VertexId b = vertex_arg(line, line.args[1]);
      for (VertexId x : {a, b}) {
        if (!declared.count(x)) throw ParseError(line.number, "edge references undeclared vertex " + to_string(x));
      }
      edges.push_back(Edge::of(a, b));
    } else {
      unknown(line);
    }
  }
  try {
    doc.graph = Graph(std::move(vertices), std::move(edges), std::move(roles));
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
  return doc;
}

std::string emit_model_document(const TopoMinorModel& m) {
  std::ostringstream out;
  out << "format densub-model " << kModelFormatVersion << '\n';
  out << "mode " << (m.mode.kind == DepthKind::subdivision ? "subdivision" : "shallow") << ' ' << m.mode.depth
      << '\n';
  out << "nails" << join_ids(m.nails) << '\n';
  for (const Path& p : m.paths) out << "path" << join_ids(p) << '\n';
  return out.str();
}

TopoMinorModel load_model_document(std::string_view text) {
  TopoMinorModel m;
  bool have_mode = false;
  bool have_nails = false;
  for (const Line& line : open_document(text, "densub-model", kModelFormatVersion)) {
    if (line.keyword == "mode") {
      if (line.args.size() != 2) throw ParseError(line.number, "mode record needs a kind and a depth");
      const auto depth = number<std::size_t>(line, line.args[1]);
      if (line.args[0] == "subdivision") {
        m.mode = DepthMode::subdivision(depth);
      } else if (line.args[0] == "shallow") {
        m.mode = DepthMode::shallow(depth);
      } else {
        throw ParseError(line.number, "unknown mode '" + line.args[0] + "'");
      }
      have_mode = true;
    } else if (line.keyword == "nails") {
      if (have_nails) throw ParseError(line.number, "duplicate nails record");
      for (const auto& tok : line.args) m.nails.push_back(vertex_arg(line, tok));
      have_nails = true;
    } else if (line.keyword == "path") {
      Path p;
      for (const auto& tok : line.args) p.push_back(vertex_arg(line, tok));
      m.paths.push_back(std::move(p));
    } else {
      unknown(line);
    }
  }
  if (!have_mode) throw ParseError(0, "model has no mode record");
  if (!have_nails) throw ParseError(0, "model has no nails record");
  return m;
}

std::string emit_tree_decomposition(const TreeDecomposition& t) {
  std::ostringstream out;
  out << "format densub-treedecomp " << kTreeDecompFormatVersion << '\n';
  for (const auto& bag : t.bags) out << "bag" << join_ids(bag) << '\n';
  for (auto [a, b] : t.tree_edges) out << "tree " << a << ' ' << b << '\n';
  return out.str();
}

TreeDecomposition load_tree_decomposition(std::string_view text) {
  TreeDecomposition t;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_lines;
  for (const Line& line : open_document(text, "densub-treedecomp", kTreeDecompFormatVersion)) {
    if (line.keyword == "bag") {
      std::vector<VertexId> bag;
      for (const auto& tok : line.args) bag.push_back(vertex_arg(line, tok));
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line.number, "bag repeats a vertex");
      }
      t.bags.push_back(std::move(bag));
    } else if (line.keyword == "tree") {
      if (line.args.size() != 2) throw ParseError(line.number, "tree record needs two bag indices");
      edges.emplace_back(number<std::size_t>(line, line.args[0]), number<std::size_t>(line, line.args[1]));
      edge_lines.push_back(line.number);
    } else {
      unknown(line);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first >= t.bags.size() || edges[i].second >= t.bags.size()) {
      throw ParseError(edge_lines[i], "tree edge references a missing bag");
    }
  }
  t.tree_edges = std::move(edges);
  return t;
}

LabeledGraphDocument to_document(const ReductionOutput& red) {
  LabeledGraphDocument doc = base_document(red.graph, red.provenance);
  const CnfFormula f = to_cnf(red.source);
  doc.metadata = {{"kind", "parity"},
                  {"r", std::to_string(red.r)},
                  {"mode", red.mode == DepthKind::subdivision ? "subdivision" : "shallow"},
                  {"target", red.target_density.str()},
                  {"formula-vars", std::to_string(f.num_vars)},
                  {"source-hash", formula_hash_hex(f)}};
  doc.clauses = signed_clauses(f);
  return doc;
}

LabeledGraphDocument to_document(const TwReduction& red) {
  LabeledGraphDocument doc = base_document(red.graph, red.provenance);
  doc.metadata = {{"kind", "treewidth"},
                  {"n", std::to_string(red.n)},
                  {"m", std::to_string(red.m)},
                  {"vars", std::to_string(red.actual_vars)},
                  {"mode", "shallow"},
                  {"target", red.rho.str()},
                  {"formula-vars", std::to_string(red.source.num_vars)},
                  {"source-hash", formula_hash_hex(red.source)}};
  doc.clauses = signed_clauses(red.source);
  return doc;
}

CnfFormula embedded_formula(const LabeledGraphDocument& doc) {
  CnfFormula f;
  const std::string& vars = doc.meta("formula-vars");
  auto [ptr, ec] = std::from_chars(vars.data(), vars.data() + vars.size(), f.num_vars);
  if (ec != std::errc() || ptr != vars.data() + vars.size()) throw ParseError(0, "malformed formula-vars");
  for (const auto& clause : doc.clauses) {
    std::vector<Literal> c;
    for (long long lit : clause) {
      if (lit == 0) throw ParseError(0, "embedded clause holds a zero literal");
      const unsigned long long var = lit < 0 ? -static_cast<unsigned long long>(lit) : lit;
      if (var > f.num_vars) throw ParseError(0, "embedded clause variable " + std::to_string(var) + " out of range");
      c.push_back(Literal{static_cast<std::uint32_t>(var - 1), lit < 0});
    }
    f.clauses.push_back(std::move(c));
  }
  if (doc.has_meta("source-hash") && doc.meta("source-hash") != formula_hash_hex(f)) {
    throw ParseError(0, "embedded formula does not match its source hash");
  }
  return f;
}

}  // namespace densub
