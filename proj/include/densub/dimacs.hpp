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

#ifndef DENSUB_DIMACS_HPP_
#define DENSUB_DIMACS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "densub/cnf.hpp"

namespace densub {

/// Reads DIMACS CNF: 'c' comment lines anywhere, one "p cnf <vars> <clauses>"
/// header, zero-terminated clauses (a clause may span lines). Throws
/// ParseError with the offending line number.
CnfFormula parse_dimacs_cnf(std::string_view text);

/// Canonical DIMACS text: header, then one clause per line.
std::string emit_dimacs_cnf(const CnfFormula& f);

/// FNV-1a 64-bit hash of the canonical DIMACS text.
std::uint64_t formula_hash(const CnfFormula& f);
std::string formula_hash_hex(const CnfFormula& f);

}  // namespace densub

#endif  // DENSUB_DIMACS_HPP_
