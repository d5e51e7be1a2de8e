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

#ifndef DENSUB_CLI_HPP_
#define DENSUB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace densub {

enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs one command line (without the program name). Documents and results
/// go to `out`, diagnostics to `err`; "-" or an omitted file reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace densub

#endif  // DENSUB_CLI_HPP_
