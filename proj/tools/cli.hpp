// Copyright 2026 The distinguish Authors
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

#ifndef DISTINGUISH_TOOLS_CLI_HPP_
#define DISTINGUISH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace distinguish::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifiedFalse = 1,
  kParseError = 2,
  kUndefinedIndex = 3,
  kInconclusive = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distinguish::cli

#endif  // DISTINGUISH_TOOLS_CLI_HPP_
