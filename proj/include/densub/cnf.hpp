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

#ifndef DENSUB_CNF_HPP_
#define DENSUB_CNF_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace densub {

/// Variables are 0-based internally; DIMACS I/O adds one.
struct Literal {
  std::uint32_t var = 0;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Throws FormulaError if a literal is out of range or a clause is empty.
  void validate() const;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

using Triple = std::array<std::uint32_t, 3>;

/// Positive 1-in-3SAT instance: every clause lists three distinct variables.
struct Positive1in3Formula {
  std::size_t num_vars = 0;
  std::vector<Triple> clauses;

  void validate() const;
  /// Number of clauses containing each variable.
  std::vector<std::size_t> frequencies() const;
  friend bool operator==(const Positive1in3Formula&, const Positive1in3Formula&) = default;
};

/// Total truth assignment, indexed by variable.
using Assignment = std::vector<bool>;

bool check_1in3(const Positive1in3Formula& phi, const Assignment& a);

/// Exactly one literal true per clause, for formulas that still carry signs.
bool check_1in3(const CnfFormula& f, const Assignment& a);

/// Ordinary CNF satisfaction.
bool satisfies(const CnfFormula& f, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a, std::size_t clause);

/// The formula as CNF with positive literals.
CnfFormula to_cnf(const Positive1in3Formula& phi);

/// The positive 1-in-3 reading of f: every clause must hold exactly three
/// positive literals over distinct variables. Throws FormulaError otherwise.
Positive1in3Formula as_positive_1in3(const CnfFormula& f);

/// Variables introduced for one original variable x.
struct NegationGadget {
  std::uint32_t positive;  // x+
  std::uint32_t negative;  // x-
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t c;
};

struct PositiveTransform {
  Positive1in3Formula formula;
  std::vector<NegationGadget> gadgets;  // indexed by original variable

  /// Image of a 1-in-3 assignment of the original formula.
  Assignment lift(const Assignment& original) const;
  /// Reads x off x+.
  Assignment project(const Assignment& transformed) const;
};

/// Replaces x by x+ and ~x by x- and adds {x+, x-, a_x}, {x+, x-, b_x},
/// {a_x, b_x, c_x} per variable. Every clause must hold exactly three
/// literals over distinct variables.
PositiveTransform eliminate_negations(const CnfFormula& f);

/// Appends copies of the first clause containing each variable whose
/// frequency is below three. Throws FormulaError("unused variable ...") for a
/// variable in no clause.
Positive1in3Formula ensure_min_frequency(const Positive1in3Formula& phi);

/// Smallest n' >= num_vars whose square root is an even integer; appends
/// clause-free dummy variables.
CnfFormula pad_formula(const CnfFormula& f);

}  // namespace densub

#endif  // DENSUB_CNF_HPP_
