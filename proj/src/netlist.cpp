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

#include "revnet/netlist.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "revnet/errors.hpp"
#include "revnet/gate_catalog.hpp"

namespace revnet {

void Netlist::index_lines() {
  primary_lines_.clear();
  functional_lines_.clear();
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (lines_[i].input == LineInput::kPrimary) primary_lines_.push_back(i);
    if (lines_[i].output.functional) functional_lines_.push_back(i);
  }
}

std::optional<std::size_t> Netlist::find_line(std::string_view name) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (lines_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::uint8_t> Netlist::initial_lines(
    const BitVector& primary_inputs) const {
  if (primary_inputs.width() != primary_lines_.size()) {
    throw ArityError("expected " + std::to_string(primary_lines_.size()) +
                     " primary input bits, got " +
                     std::to_string(primary_inputs.width()));
  }
  std::vector<std::uint8_t> values(lines_.size(), 0);
  std::size_t next_primary = 0;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    switch (lines_[i].input) {
      case LineInput::kPrimary:
        values[i] = static_cast<std::uint8_t>(primary_inputs.bit(next_primary++));
        break;
      case LineInput::kConstZero:
        values[i] = 0;
        break;
      case LineInput::kConstOne:
        values[i] = 1;
        break;
    }
  }
  return values;
}

std::vector<std::uint8_t> Netlist::run(
    std::vector<std::uint8_t> line_values) const {
  for (const GateInstance& inst : gates_) {
    std::uint32_t packed = 0;
    for (std::size_t p = 0; p < inst.lines.size(); ++p) {
      packed |= static_cast<std::uint32_t>(line_values[inst.lines[p]] & 1u) << p;
    }
    const std::uint32_t image = inst.gate->apply_bits(packed);
    for (std::size_t p = 0; p < inst.lines.size(); ++p) {
      line_values[inst.lines[p]] = static_cast<std::uint8_t>((image >> p) & 1u);
    }
  }
  return line_values;
}

BitVector Netlist::simulate(const BitVector& primary_inputs) const {
  const std::vector<std::uint8_t> final_values =
      run(initial_lines(primary_inputs));
  BitVector out(functional_lines_.size());
  for (std::size_t i = 0; i < functional_lines_.size(); ++i) {
    out.set_bit(i, final_values[functional_lines_[i]]);
  }
  return out;
}

Netlist Netlist::reordered(const std::vector<std::size_t>& new_to_old) const {
  if (new_to_old.size() != lines_.size()) {
    throw WiringError("reorder permutation has wrong length");
  }
  std::vector<std::size_t> old_to_new(lines_.size(), lines_.size());
  for (std::size_t i = 0; i < new_to_old.size(); ++i) {
    const std::size_t old = new_to_old[i];
    if (old >= lines_.size() || old_to_new[old] != lines_.size()) {
      throw WiringError("reorder permutation is not a permutation");
    }
    old_to_new[old] = i;
  }
  Netlist result;
  result.lines_.reserve(lines_.size());
  for (std::size_t old : new_to_old) result.lines_.push_back(lines_[old]);
  result.gates_.reserve(gates_.size());
  for (const GateInstance& inst : gates_) {
    GateInstance moved{inst.gate, inst.lines};
    for (std::size_t& line : moved.lines) line = old_to_new[line];
    result.gates_.push_back(std::move(moved));
  }
  result.index_lines();
  return result;
}

Netlist Netlist::inverted() const {
  Netlist result;
  result.lines_ = lines_;
  result.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    result.gates_.push_back(
        GateInstance{std::make_shared<Gate>(inverse(*it->gate)), it->lines});
  }
  result.index_lines();
  return result;
}

std::size_t NetlistBuilder::add_line(std::string name, LineInput input) {
  if (!is_valid_name(name)) {
    throw Error("invalid line name '" + name + "'");
  }
  for (const Line& line : net_.lines_) {
    if (line.name == name) {
      throw Error("duplicate line name '" + name + "'");
    }
  }
  net_.lines_.push_back(Line{std::move(name), input, OutputRole{}});
  return net_.lines_.size() - 1;
}

std::size_t NetlistBuilder::add_input(std::string name) {
  return add_line(std::move(name), LineInput::kPrimary);
}

std::size_t NetlistBuilder::add_const(std::string name, int value) {
  if (value != 0 && value != 1) {
    throw Error("constant line value must be 0 or 1");
  }
  return add_line(std::move(name),
                  value == 0 ? LineInput::kConstZero : LineInput::kConstOne);
}

void NetlistBuilder::set_output(std::size_t line, std::string name) {
  if (line >= net_.lines_.size()) {
    throw WiringError("output line index out of range");
  }
  if (!is_valid_name(name)) {
    throw Error("invalid output name '" + name + "'");
  }
  for (std::size_t i = 0; i < net_.lines_.size(); ++i) {
    if (i != line && net_.lines_[i].output.functional &&
        net_.lines_[i].output.name == name) {
      throw Error("duplicate output name '" + name + "'");
    }
  }
  net_.lines_[line].output = OutputRole{true, std::move(name)};
}

void NetlistBuilder::set_garbage(std::size_t line) {
  if (line >= net_.lines_.size()) {
    throw WiringError("garbage line index out of range");
  }
  net_.lines_[line].output = OutputRole{};
}

void NetlistBuilder::add_gate(std::shared_ptr<const Gate> gate,
                              std::vector<std::size_t> lines) {
  if (gate == nullptr) throw Error("gate must not be null");
  if (lines.size() != gate->arity()) {
    throw ArityError("gate '" + gate->name() + "' expects " +
                     std::to_string(gate->arity()) + " lines, got " +
                     std::to_string(lines.size()));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] >= net_.lines_.size()) {
      throw WiringError("gate '" + gate->name() + "' line index " +
                        std::to_string(lines[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (lines[j] == lines[i]) {
        throw WiringError("gate '" + gate->name() +
                          "' bound twice to line index " +
                          std::to_string(lines[i]));
      }
    }
  }
  net_.gates_.push_back(GateInstance{std::move(gate), std::move(lines)});
}

void NetlistBuilder::add_gate(std::string_view catalog_name,
                              std::vector<std::size_t> lines) {
  std::shared_ptr<const Gate> gate =
      GateCatalog::instance().find(catalog_name);
  if (gate == nullptr) {
    throw Error("unknown catalog gate '" + std::string(catalog_name) + "'");
  }
  add_gate(std::move(gate), std::move(lines));
}

Netlist NetlistBuilder::build() {
  if (net_.lines_.empty()) {
    throw Error("netlist needs at least one line");
  }
  net_.index_lines();
  Netlist result = std::move(net_);
  net_ = Netlist();
  return result;
}

Netlist renamed(
    const Netlist& net,
    const std::unordered_map<std::string, std::string>& line_names,
    const std::unordered_map<std::string, std::string>& output_names) {
  for (const auto& [old_name, unused] : line_names) {
    if (!net.find_line(old_name).has_value()) {
      throw Error("renamed: no line named '" + old_name + "'");
    }
  }
  std::unordered_set<std::string> seen_outputs;
  for (const Line& line : net.lines()) {
    if (line.output.functional) seen_outputs.insert(line.output.name);
  }
  for (const auto& [old_name, unused] : output_names) {
    if (seen_outputs.count(old_name) == 0) {
      throw Error("renamed: no output named '" + old_name + "'");
    }
  }

  NetlistBuilder builder;
  for (const Line& line : net.lines()) {
    auto it = line_names.find(line.name);
    std::string name = it == line_names.end() ? line.name : it->second;
    if (line.input == LineInput::kPrimary) {
      builder.add_input(std::move(name));
    } else {
      builder.add_const(std::move(name),
                        line.input == LineInput::kConstOne ? 1 : 0);
    }
  }
  for (std::size_t i = 0; i < net.lines().size(); ++i) {
    const Line& line = net.lines()[i];
    if (!line.output.functional) continue;
    auto it = output_names.find(line.output.name);
    builder.set_output(i,
                       it == output_names.end() ? line.output.name : it->second);
  }
  for (const GateInstance& inst : net.gates()) {
    builder.add_gate(inst.gate, inst.lines);
  }
  return builder.build();
}

std::size_t input_ordinal(const Netlist& net, std::string_view line_name) {
  const std::vector<std::size_t>& primaries = net.primary_lines();
  for (std::size_t i = 0; i < primaries.size(); ++i) {
    if (net.lines()[primaries[i]].name == line_name) return i;
  }
  throw Error("no primary input line named '" + std::string(line_name) + "'");
}

std::size_t output_ordinal(const Netlist& net, std::string_view output_name) {
  const std::vector<std::size_t>& outputs = net.functional_lines();
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (net.lines()[outputs[i]].output.name == output_name) return i;
  }
  throw Error("no functional output named '" + std::string(output_name) + "'");
}

std::vector<BitVector> truth_table(const Netlist& net) {
  const std::size_t width = net.primary_count();
  if (width > kExhaustivePrimaryBound) {
    throw CapacityError("truth table over " + std::to_string(width) +
                        " primary inputs exceeds the exhaustive bound");
  }
  const std::uint64_t count = std::uint64_t{1} << width;
  std::vector<BitVector> rows;
  rows.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    rows.push_back(net.simulate(BitVector::from_integer(x, width)));
  }
  return rows;
}

ParityVerdict verify_parity_structural(const Netlist& net) {
  for (std::size_t i = 0; i < net.gates().size(); ++i) {
    if (!is_parity_preserving(*net.gates()[i].gate)) {
      ParityVerdict verdict;
      verdict.preserving = false;
      verdict.offending_gate = i;
      return verdict;
    }
  }
  return ParityVerdict{};
}

namespace {

std::uint8_t parity_of(const std::vector<std::uint8_t>& values) {
  std::uint8_t parity = 0;
  for (std::uint8_t v : values) parity ^= (v & 1u);
  return parity;
}

}  // namespace

ParityVerdict verify_parity_exhaustive(const Netlist& net) {
  const std::size_t width = net.primary_count();
  if (width > kExhaustivePrimaryBound) {
    throw CapacityError("parity sweep over " + std::to_string(width) +
                        " primary inputs exceeds the exhaustive bound");
  }
  const std::uint64_t count = std::uint64_t{1} << width;
  for (std::uint64_t x = 0; x < count; ++x) {
    const BitVector input = BitVector::from_integer(x, width);
    std::vector<std::uint8_t> values = net.initial_lines(input);
    const std::uint8_t before = parity_of(values);
    values = net.run(std::move(values));
    if (parity_of(values) != before) {
      ParityVerdict verdict;
      verdict.preserving = false;
      verdict.counterexample = input;
      return verdict;
    }
  }
  return ParityVerdict{};
}

bool verify_bijective(const Netlist& net) {
  const std::size_t width = net.line_count();
  if (width > kExhaustiveLineBound) {
    throw CapacityError("bijectivity sweep over " + std::to_string(width) +
                        " lines exceeds the exhaustive bound");
  }
  const std::uint64_t count = std::uint64_t{1} << width;
  std::vector<bool> seen(count, false);
  std::vector<std::uint8_t> values(width, 0);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::size_t i = 0; i < width; ++i) {
      values[i] = static_cast<std::uint8_t>((x >> i) & 1u);
    }
    values = net.run(std::move(values));
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < width; ++i) {
      image |= static_cast<std::uint64_t>(values[i] & 1u) << i;
    }
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

CostReport cost_report(const Netlist& net) {
  CostReport report;
  report.gate_count = net.gates().size();
  report.line_count = net.line_count();
  for (const Line& line : net.lines()) {
    if (line.input != LineInput::kPrimary) ++report.constant_inputs;
    if (!line.output.functional) ++report.garbage_outputs;
  }
  std::vector<std::size_t> level(net.line_count(), 0);
  std::size_t depth = 0;
  std::uint64_t total_cost = 0;
  bool cost_known = true;
  for (const GateInstance& inst : net.gates()) {
    std::size_t gate_level = 0;
    for (std::size_t line : inst.lines) {
      gate_level = std::max(gate_level, level[line]);
    }
    ++gate_level;
    for (std::size_t line : inst.lines) level[line] = gate_level;
    depth = std::max(depth, gate_level);
    if (inst.gate->quantum_cost().has_value()) {
      total_cost += *inst.gate->quantum_cost();
    } else {
      cost_known = false;
    }
  }
  report.depth = depth;
  if (cost_known) report.quantum_cost = total_cost;
  return report;
}

namespace {

// Picks `base` if unused, else the first free `base_2`, `base_3`, ...
std::string deduplicated(const std::string& base,
                         const std::unordered_set<std::string>& used) {
  if (used.count(base) == 0) return base;
  for (std::size_t n = 2;; ++n) {
    std::string candidate = base + "_" + std::to_string(n);
    if (used.count(candidate) == 0) return candidate;
  }
}

}  // namespace

Netlist compose(const Netlist& first, const Netlist& second,
                const std::vector<PortConnection>& connections) {
  std::vector<bool> output_used(first.functional_count(), false);
  std::vector<bool> input_used(second.primary_count(), false);
  for (const PortConnection& conn : connections) {
    if (conn.output_ordinal >= first.functional_count()) {
      throw WiringError("compose: output ordinal out of range");
    }
    if (conn.input_ordinal >= second.primary_count()) {
      throw WiringError("compose: input ordinal out of range");
    }
    if (output_used[conn.output_ordinal]) {
      throw WiringError("compose: output ordinal connected twice");
    }
    if (input_used[conn.input_ordinal]) {
      throw WiringError("compose: input ordinal connected twice");
    }
    output_used[conn.output_ordinal] = true;
    input_used[conn.input_ordinal] = true;
  }

  const std::size_t kUnmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> second_to_result(second.line_count(), kUnmapped);
  // The merged result starts as first's lines; connected lines take
  // second's output role, everything else of first is untouched.
  std::vector<Line> result_lines = first.lines();
  for (const PortConnection& conn : connections) {
    const std::size_t f = first.functional_lines()[conn.output_ordinal];
    const std::size_t s = second.primary_lines()[conn.input_ordinal];
    result_lines[f].output = second.lines()[s].output;
    second_to_result[s] = f;
  }
  std::unordered_set<std::string> used_names;
  for (const Line& line : result_lines) used_names.insert(line.name);
  for (std::size_t s = 0; s < second.line_count(); ++s) {
    if (second_to_result[s] != kUnmapped) continue;
    Line line = second.lines()[s];
    line.name = deduplicated(line.name, used_names);
    used_names.insert(line.name);
    second_to_result[s] = result_lines.size();
    result_lines.push_back(std::move(line));
  }
  // Functional output names must stay unique as well; the earlier line
  // keeps the contested name.
  std::unordered_set<std::string> used_outputs;
  for (Line& line : result_lines) {
    if (!line.output.functional) continue;
    line.output.name = deduplicated(line.output.name, used_outputs);
    used_outputs.insert(line.output.name);
  }

  NetlistBuilder builder;
  for (const Line& line : result_lines) {
    if (line.input == LineInput::kPrimary) {
      builder.add_input(line.name);
    } else {
      builder.add_const(line.name,
                        line.input == LineInput::kConstOne ? 1 : 0);
    }
  }
  for (std::size_t i = 0; i < result_lines.size(); ++i) {
    if (result_lines[i].output.functional) {
      builder.set_output(i, result_lines[i].output.name);
    }
  }
  for (const GateInstance& inst : first.gates()) {
    builder.add_gate(inst.gate, inst.lines);
  }
  for (const GateInstance& inst : second.gates()) {
    std::vector<std::size_t> lines = inst.lines;
    for (std::size_t& line : lines) line = second_to_result[line];
    builder.add_gate(inst.gate, std::move(lines));
  }
  return builder.build();
}

Gate flatten(const Netlist& net, std::string name,
             std::optional<std::uint32_t> quantum_cost) {
  const std::size_t width = net.line_count();
  if (width > kMaxGateArity) {
    throw CapacityError("flatten: " + std::to_string(width) +
                        " lines exceed the gate arity limit");
  }
  const std::uint32_t count = std::uint32_t{1} << width;
  std::vector<std::uint32_t> table(count, 0);
  std::vector<std::uint8_t> values(width, 0);
  for (std::uint32_t x = 0; x < count; ++x) {
    for (std::size_t i = 0; i < width; ++i) {
      values[i] = static_cast<std::uint8_t>((x >> i) & 1u);
    }
    values = net.run(std::move(values));
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < width; ++i) {
      image |= static_cast<std::uint32_t>(values[i] & 1u) << i;
    }
    table[x] = image;
  }
  return Gate(std::move(name), width, std::move(table), quantum_cost);
}

}  // namespace revnet
