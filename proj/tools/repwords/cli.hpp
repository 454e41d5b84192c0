// Copyright 2026 The repwords Authors.
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

#ifndef REPWORDS_TOOLS_CLI_HPP_
#define REPWORDS_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace repwords::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // check found violations, verify failed
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapReached = 3;  // search hit its depth cap

// Longest word `check` will load into memory.
inline constexpr std::size_t kMaxCheckLength = 1'000'000;

// Entry point for `repwords generate|check|verify|search`. argv[0] is the
// program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace repwords::cli

#endif  // REPWORDS_TOOLS_CLI_HPP_
