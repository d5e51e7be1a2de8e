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

#ifndef DENSUB_ERRORS_HPP_
#define DENSUB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace densub {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated graph invariant or a failed graph edit.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A topological-minor model that does not witness what it claims.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula, assignment or reduction precondition.
class FormulaError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a search exhausts its SolveLimits.
class SearchBudgetError : public Error {
 public:
  SearchBudgetError() : Error("search budget exceeded") {}
};

/// SearchBudgetError carrying the best result found before the budget ran
/// out (if any was found).
template <typename Best>
class BudgetExceeded : public SearchBudgetError {
 public:
  BudgetExceeded() = default;
  explicit BudgetExceeded(Best best) : best_(std::move(best)), has_best_(true) {}

  bool has_best() const { return has_best_; }
  const Best& best() const { return best_; }

 private:
  Best best_{};
  bool has_best_ = false;
};

}  // namespace densub

#endif  // DENSUB_ERRORS_HPP_
