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

#include "densub/cnf.hpp"

#include <algorithm>
#include <string>

#include "densub/errors.hpp"

namespace densub {

void CnfFormula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) throw FormulaError("clause " + std::to_string(i + 1) + " is empty");
    for (const Literal& l : clauses[i]) {
      if (l.var >= num_vars) {
        throw FormulaError("clause " + std::to_string(i + 1) + " uses variable " +
                           std::to_string(l.var + 1) + " out of range");
      }
    }
  }
}

void Positive1in3Formula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const Triple& c = clauses[i];
    for (auto v : c) {
      if (v >= num_vars) {
        throw FormulaError("clause " + std::to_string(i + 1) + " uses variable " +
                           std::to_string(v + 1) + " out of range");
      }
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw FormulaError("clause " + std::to_string(i + 1) + " repeats a variable");
    }
  }
}

std::vector<std::size_t> Positive1in3Formula::frequencies() const {
  std::vector<std::size_t> freq(num_vars, 0);
  for (const Triple& c : clauses) {
    for (auto v : c) ++freq.at(v);
  }
  return freq;
}

bool check_1in3(const Positive1in3Formula& phi, const Assignment& a) {
  if (a.size() < phi.num_vars) throw FormulaError("assignment is not total");
  return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Triple& c) {
    return a[c[0]] + a[c[1]] + a[c[2]] == 1;
  });
}

bool check_1in3(const CnfFormula& f, const Assignment& a) {
  if (a.size() < f.num_vars) throw FormulaError("assignment is not total");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
    return std::count_if(clause.begin(), clause.end(),
                         [&](const Literal& l) { return a[l.var] != l.negated; }) == 1;
  });
}

bool satisfies(const CnfFormula& f, const Assignment& a, std::size_t clause) {
  const auto& c = f.clauses.at(clause);
  return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a.at(l.var) != l.negated; });
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() < f.num_vars) throw FormulaError("assignment is not total");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (!satisfies(f, a, i)) return false;
  }
  return true;
}

Assignment PositiveTransform::lift(const Assignment& original) const {
  Assignment out(formula.num_vars, false);
  for (std::size_t x = 0; x < gadgets.size(); ++x) {
    const NegationGadget& g = gadgets[x];
    out[g.positive] = original.at(x);
    out[g.negative] = !original.at(x);
    out[g.c] = true;
  }
  return out;
}

Assignment PositiveTransform::project(const Assignment& transformed) const {
  Assignment out(gadgets.size(), false);
  for (std::size_t x = 0; x < gadgets.size(); ++x) out[x] = transformed.at(gadgets[x].positive);
  return out;
}

PositiveTransform eliminate_negations(const CnfFormula& f) {
  f.validate();
  PositiveTransform out;
  out.formula.num_vars = 5 * f.num_vars;
  for (std::uint32_t x = 0; x < f.num_vars; ++x) {
    const std::uint32_t base = 5 * x;
    out.gadgets.push_back({base, base + 1, base + 2, base + 3, base + 4});
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& clause = f.clauses[i];
    if (clause.size() != 3) {
      throw FormulaError("clause " + std::to_string(i + 1) + " has width " +
                         std::to_string(clause.size()) + ", expected 3");
    }
    Triple t{};
    for (std::size_t j = 0; j < 3; ++j) {
      const NegationGadget& g = out.gadgets[clause[j].var];
      t[j] = clause[j].negated ? g.negative : g.positive;
    }
    out.formula.clauses.push_back(t);
  }
  for (const NegationGadget& g : out.gadgets) {
    out.formula.clauses.push_back({g.positive, g.negative, g.a});
    out.formula.clauses.push_back({g.positive, g.negative, g.b});
    out.formula.clauses.push_back({g.a, g.b, g.c});
  }
  out.formula.validate();
  return out;
}

Positive1in3Formula ensure_min_frequency(const Positive1in3Formula& phi) {
  phi.validate();
  Positive1in3Formula out = phi;
  std::vector<std::size_t> freq = out.frequencies();
  for (std::uint32_t v = 0; v < out.num_vars; ++v) {
    if (freq[v] == 0) throw FormulaError("unused variable " + std::to_string(v + 1));
    if (freq[v] >= 3) continue;
    auto first = std::find_if(phi.clauses.begin(), phi.clauses.end(), [v](const Triple& c) {
      return std::find(c.begin(), c.end(), v) != c.end();
    });
    const Triple copy = *first;
    while (freq[v] < 3) {
      out.clauses.push_back(copy);
      for (auto w : copy) ++freq[w];
    }
  }
  return out;
}

CnfFormula pad_formula(const CnfFormula& f) {
  std::size_t side = 2;
  while (side * side < f.num_vars) side += 2;
  CnfFormula out = f;
  out.num_vars = side * side;
  return out;
}

CnfFormula to_cnf(const Positive1in3Formula& phi) {
  CnfFormula f;
  f.num_vars = phi.num_vars;
  for (const Triple& c : phi.clauses) {
    f.clauses.push_back({Literal{c[0], false}, Literal{c[1], false}, Literal{c[2], false}});
  }
  return f;
}

Positive1in3Formula as_positive_1in3(const CnfFormula& f) {
  f.validate();
  Positive1in3Formula phi;
  phi.num_vars = f.num_vars;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    if (c.size() != 3) {
      throw FormulaError("clause " + std::to_string(i + 1) + " has width " + std::to_string(c.size()) +
                         ", expected 3");
    }
    for (const Literal& l : c) {
      if (l.negated) throw FormulaError("clause " + std::to_string(i + 1) + " has a negative literal");
    }
    phi.clauses.push_back({c[0].var, c[1].var, c[2].var});
  }
  phi.validate();
  return phi;
}

}  // namespace densub
