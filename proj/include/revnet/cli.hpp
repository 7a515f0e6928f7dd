// Copyright 2026 The Revnet Authors.
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

#ifndef REVNET_CLI_HPP_
#define REVNET_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace revnet {

// Entry point of the command-line tool, factored out of main() so tests
// can drive it in-process. `args` excludes the program name. FILE
// arguments accept '-' to read `in` / write `out` instead of a path.
//
// Returns 0 when the command succeeded and every check it ran passed,
// 1 when a verification failed (non-bijective netlist, broken parity,
// undetected faults, function-table mismatch), and 2 on usage errors or
// unreadable/unparsable input.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace revnet

#endif  // REVNET_CLI_HPP_
