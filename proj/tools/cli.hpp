// Copyright 2026 The symratio Authors
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

#ifndef SYMRATIO_TOOLS_CLI_HPP_
#define SYMRATIO_TOOLS_CLI_HPP_

#include <ostream>

namespace symratio::cli {

// Exit codes: 0 success, 1 a verified property failed, 2 bad input/usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses argv, runs one subcommand and writes its JSON report to `out`.
// Diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symratio::cli

#endif  // SYMRATIO_TOOLS_CLI_HPP_
