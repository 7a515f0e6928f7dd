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

#include "revnet/dsl.hpp"

#include <charconv>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>

#include "revnet/errors.hpp"
#include "revnet/gate.hpp"
#include "revnet/gate_catalog.hpp"

namespace revnet {

std::string format_diagnostic(const Diagnostic& diagnostic) {
  const char* severity =
      diagnostic.severity == Severity::kError ? "error" : "warning";
  if (diagnostic.line == 0) {
    return std::string(severity) + ": " + diagnostic.message;
  }
  return std::to_string(diagnostic.line) + ": " + severity + ": " +
         diagnostic.message;
}

bool ParseResult::ok() const {
  if (!netlist.has_value()) return false;
  for (const Diagnostic& diagnostic : diagnostics) {
    if (diagnostic.severity == Severity::kError) return false;
  }
  return true;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

// Statement tokens with the trailing comment stripped.
std::vector<std::string_view> tokenize(std::string_view line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

struct Parser {
  NetlistBuilder builder;
  std::vector<Diagnostic> diagnostics;
  std::unordered_map<std::string, std::size_t> line_index;
  std::unordered_map<std::string, std::shared_ptr<const Gate>> defgates;
  bool failed = false;

  void error(std::size_t line, std::string message) {
    diagnostics.push_back({Severity::kError, line, std::move(message)});
    failed = true;
  }

  void warning(std::size_t line, std::string message) {
    diagnostics.push_back({Severity::kWarning, line, std::move(message)});
  }

  void handle_line(const std::vector<std::string_view>& tokens,
                   std::size_t lineno) {
    if (tokens.size() < 3) {
      error(lineno, "line statement needs a name and a role");
      return;
    }
    const std::string name(tokens[1]);
    const std::string_view role = tokens[2];
    std::size_t index = 0;
    try {
      if (role == "in") {
        index = builder.add_input(name);
      } else if (role == "const0") {
        index = builder.add_const(name, 0);
      } else if (role == "const1") {
        index = builder.add_const(name, 1);
      } else {
        error(lineno, "unknown line role '" + std::string(role) +
                          "' (expected in, const0 or const1)");
        return;
      }
    } catch (const std::exception& e) {
      error(lineno, e.what());
      return;
    }
    line_index.emplace(name, index);
    if (tokens.size() == 3) return;  // defaults to garbage
    if (tokens[3] == "garbage" && tokens.size() == 4) return;
    if (tokens[3] == "out" && tokens.size() == 5) {
      try {
        builder.set_output(index, std::string(tokens[4]));
      } catch (const std::exception& e) {
        error(lineno, e.what());
      }
      return;
    }
    error(lineno, "malformed output clause (expected 'out NAME' or 'garbage')");
  }

  void handle_defgate(const std::vector<std::string_view>& tokens,
                      std::size_t lineno) {
    if (tokens.size() < 3) {
      error(lineno, "defgate needs a name and an arity");
      return;
    }
    const std::string name(tokens[1]);
    if (GateCatalog::instance().contains(name)) {
      error(lineno, "defgate '" + name + "' shadows a standard gate");
      return;
    }
    if (defgates.count(name) != 0) {
      error(lineno, "defgate '" + name + "' redefined");
      return;
    }
    std::size_t arity = 0;
    const std::string_view arity_token = tokens[2];
    const auto [ptr, ec] = std::from_chars(
        arity_token.data(), arity_token.data() + arity_token.size(), arity);
    if (ec != std::errc{} || ptr != arity_token.data() + arity_token.size()) {
      error(lineno, "invalid arity '" + std::string(arity_token) + "'");
      return;
    }
    if (arity == 0) {
      error(lineno, "gate arity must be at least 1");
      return;
    }
    // Checked before sizing the table so absurd arities cannot trigger
    // huge allocations.
    if (arity > kMaxGateArity) {
      error(lineno, "gate arity " + std::to_string(arity) +
                        " exceeds the limit of " +
                        std::to_string(kMaxGateArity));
      return;
    }
    const std::size_t space = std::size_t{1} << arity;
    if (tokens.size() != 3 + space) {
      error(lineno, "defgate '" + name + "' needs " + std::to_string(space) +
                        " image entries, got " +
                        std::to_string(tokens.size() - 3));
      return;
    }
    std::vector<std::uint32_t> table(space, 0);
    for (std::size_t i = 0; i < space; ++i) {
      const std::string_view token = tokens[3 + i];
      std::uint32_t value = 0;
      const auto [p, e] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (e != std::errc{} || p != token.data() + token.size() ||
          value >= space) {
        error(lineno, "image entry '" + std::string(token) +
                          "' is not a value below " + std::to_string(space));
        return;
      }
      table[i] = value;
    }
    try {
      auto gate = std::make_shared<Gate>(name, arity, std::move(table),
                                         std::nullopt);
      if (!is_reversible(*gate)) {
        warning(lineno, "defgate '" + name +
                            "' is not a bijection; the checkers will flag "
                            "netlists using it");
      }
      defgates.emplace(name, std::move(gate));
    } catch (const std::exception& e) {
      error(lineno, e.what());
    }
  }

  void handle_gate(const std::vector<std::string_view>& tokens,
                   std::size_t lineno) {
    if (tokens.size() < 2) {
      error(lineno, "gate statement needs a gate name");
      return;
    }
    const std::string name(tokens[1]);
    std::shared_ptr<const Gate> gate;
    if (const auto it = defgates.find(name); it != defgates.end()) {
      gate = it->second;
    } else {
      gate = GateCatalog::instance().find(name);
    }
    if (gate == nullptr) {
      error(lineno, "unknown gate '" + name + "'");
      return;
    }
    std::vector<std::size_t> lines;
    lines.reserve(tokens.size() - 2);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const auto it = line_index.find(std::string(tokens[i]));
      if (it == line_index.end()) {
        error(lineno, "unknown line '" + std::string(tokens[i]) + "'");
        return;
      }
      lines.push_back(it->second);
    }
    try {
      builder.add_gate(std::move(gate), std::move(lines));
    } catch (const std::exception& e) {
      error(lineno, e.what());
    }
  }
};

}  // namespace

ParseResult parse_netlist(std::string_view text) {
  Parser parser;
  bool header_seen = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                         : end - start);
    ++lineno;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    const std::vector<std::string_view> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!header_seen) {
      if (tokens[0] != "revnet") {
        parser.error(lineno, "expected 'revnet 1' header");
        return {std::nullopt, std::move(parser.diagnostics)};
      }
      if (tokens.size() != 2 || tokens[1] != "1") {
        parser.error(lineno, "unsupported format version");
        return {std::nullopt, std::move(parser.diagnostics)};
      }
      header_seen = true;
      continue;
    }
    if (tokens[0] == "line") {
      parser.handle_line(tokens, lineno);
    } else if (tokens[0] == "defgate") {
      parser.handle_defgate(tokens, lineno);
    } else if (tokens[0] == "gate") {
      parser.handle_gate(tokens, lineno);
    } else {
      parser.error(lineno, "unknown statement '" + std::string(tokens[0]) +
                               "'");
    }
  }
  if (!header_seen) {
    parser.error(0, "missing 'revnet 1' header");
  }
  if (parser.failed) {
    return {std::nullopt, std::move(parser.diagnostics)};
  }
  try {
    return {parser.builder.build(), std::move(parser.diagnostics)};
  } catch (const std::exception& e) {
    parser.error(0, e.what());
    return {std::nullopt, std::move(parser.diagnostics)};
  }
}

std::string print_netlist(const Netlist& net) {
  std::string out = "revnet 1\n";
  for (const Line& line : net.lines()) {
    out += "line " + line.name + " ";
    switch (line.input) {
      case LineInput::kPrimary:
        out += "in";
        break;
      case LineInput::kConstZero:
        out += "const0";
        break;
      case LineInput::kConstOne:
        out += "const1";
        break;
    }
    if (line.output.functional) {
      out += " out " + line.output.name;
    } else {
      out += " garbage";
    }
    out += "\n";
  }
  // Non-standard gates become defgate statements in first-use order.
  std::vector<const Gate*> custom;
  std::unordered_map<std::string, const Gate*> custom_by_name;
  for (const GateInstance& inst : net.gates()) {
    const Gate& gate = *inst.gate;
    const std::shared_ptr<const Gate> standard =
        GateCatalog::instance().find(gate.name());
    if (standard != nullptr) {
      if (standard->table() == gate.table()) continue;
      throw Error("gate '" + gate.name() +
                  "' does not match the standard gate of the same name");
    }
    const auto [it, inserted] = custom_by_name.emplace(gate.name(), &gate);
    if (inserted) {
      custom.push_back(&gate);
    } else if (it->second->table() != gate.table()) {
      throw Error("two different gates share the name '" + gate.name() + "'");
    }
  }
  for (const Gate* gate : custom) {
    out += "defgate " + gate->name() + " " + std::to_string(gate->arity());
    for (std::uint32_t image : gate->table()) {
      out += " " + std::to_string(image);
    }
    out += "\n";
  }
  for (const GateInstance& inst : net.gates()) {
    out += "gate " + inst.gate->name();
    for (std::size_t line : inst.lines) {
      out += " " + net.lines()[line].name;
    }
    out += "\n";
  }
  return out;
}

}  // namespace revnet
