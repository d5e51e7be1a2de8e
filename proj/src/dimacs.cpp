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

#include "densub/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "densub/errors.hpp"

namespace densub {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
std::optional<T> to_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text) {
  CnfFormula f;
  std::optional<std::size_t> declared_clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == 'c') continue;
    if (tokens[0] == "p") {
      if (declared_clauses) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError(line_no, "malformed header");
      auto vars = to_number<std::size_t>(tokens[2]);
      auto clauses = to_number<std::size_t>(tokens[3]);
      if (!vars || !clauses) throw ParseError(line_no, "malformed header");
      f.num_vars = *vars;
      declared_clauses = *clauses;
      continue;
    }
    if (!declared_clauses) throw ParseError(line_no, "clause before header");
    for (std::string_view tok : tokens) {
      auto lit = to_number<long long>(tok);
      if (!lit) throw ParseError(line_no, "malformed literal '" + std::string(tok) + "'");
      if (*lit == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        f.clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      const unsigned long long var = *lit < 0 ? -static_cast<unsigned long long>(*lit) : *lit;
      if (var > f.num_vars) {
        throw ParseError(line_no, "variable " + std::to_string(var) + " out of range 1.." + std::to_string(f.num_vars));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal{static_cast<std::uint32_t>(var - 1), *lit < 0});
    }
  }
  if (!declared_clauses) throw ParseError(line_no, "missing header");
  if (!pending.empty()) throw ParseError(pending_line, "missing terminator");
  if (f.clauses.size() != *declared_clauses) {
    throw ParseError(line_no, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
  }
  return f;
}

std::string emit_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const Literal& l : clause) out << (l.negated ? "-" : "") << (l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

std::uint64_t formula_hash(const CnfFormula& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : emit_dimacs_cnf(f)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string formula_hash_hex(const CnfFormula& f) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(formula_hash(f)));
  return buf;
}

}  // namespace densub
