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

#ifndef REVNET_DSL_HPP_
#define REVNET_DSL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revnet/netlist.hpp"

namespace revnet {

// Line-oriented netlist text format.
//
//   revnet 1
//   line NAME in|const0|const1 [out NAME | garbage]
//   defgate NAME ARITY IMG0 IMG1 ... IMG{2^ARITY-1}
//   gate NAME LINE1 ... LINEk
//
// The first significant line must be the header. `#` starts a comment
// that runs to the end of the line; blank lines are ignored. Lines
// default to garbage outputs. defgate declares a gate as an explicit
// image table (port 0 = least significant image bit); its name must not
// shadow a standard gate, and a non-bijective table is accepted with a
// warning so the checkers can report it. Statements execute in order, so
// lines must be declared before gates use them.

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::size_t line = 0;  // 1-based source line, 0 when whole-input
  std::string message;
};

// "LINE: error: MESSAGE" (callers prepend the file name).
std::string format_diagnostic(const Diagnostic& diagnostic);

struct ParseResult {
  std::optional<Netlist> netlist;
  std::vector<Diagnostic> diagnostics;

  bool ok() const;  // a netlist was produced and no errors were reported
};

ParseResult parse_netlist(std::string_view text);

// Canonical form: header, every line with an explicit output clause, one
// defgate per non-standard gate in first-use order, then the cascade.
// Parsing the result reproduces the netlist (and the same printout).
std::string print_netlist(const Netlist& net);

}  // namespace revnet

#endif  // REVNET_DSL_HPP_
