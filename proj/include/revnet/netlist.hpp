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

#ifndef REVNET_NETLIST_HPP_
#define REVNET_NETLIST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revnet/bit_vector.hpp"
#include "revnet/gate.hpp"

namespace revnet {

// Exhaustive sweeps stop at 2^20 evaluations: whole-line-space checks
// (verify_bijective) are bounded by line count, primary-input sweeps
// (truth_table, verify_parity_exhaustive, exhaustive fault scans) by the
// number of primary inputs.
inline constexpr std::size_t kExhaustiveLineBound = 20;
inline constexpr std::size_t kExhaustivePrimaryBound = 20;

// How a line enters the circuit.
enum class LineInput { kPrimary, kConstZero, kConstOne };

// How a line leaves the circuit: as a named functional output or as
// garbage kept only for reversibility.
struct OutputRole {
  bool functional = false;
  std::string name;  // empty for garbage

  friend bool operator==(const OutputRole&, const OutputRole&) = default;
};

struct Line {
  std::string name;
  LineInput input = LineInput::kPrimary;
  OutputRole output;  // garbage unless marked functional
};

// A gate bound to distinct lines of the netlist; bindings are in port
// order and their count equals the gate's arity.
struct GateInstance {
  std::shared_ptr<const Gate> gate;
  std::vector<std::size_t> lines;
};

// An ordered cascade of gate instances over named lines. The cascade order
// is the evaluation order, so cycles are impossible by construction.
// Netlists are immutable once built (see NetlistBuilder); all simulation
// entry points are pure functions and safe to call concurrently.
//
// Functional outputs are reported in line order throughout.
class Netlist {
 public:
  // An empty placeholder; built netlists always have at least one line.
  Netlist() = default;

  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<GateInstance>& gates() const { return gates_; }
  std::size_t line_count() const { return lines_.size(); }

  // Line indices of primary inputs / functional outputs, in line order.
  const std::vector<std::size_t>& primary_lines() const {
    return primary_lines_;
  }
  const std::vector<std::size_t>& functional_lines() const {
    return functional_lines_;
  }
  std::size_t primary_count() const { return primary_lines_.size(); }
  std::size_t functional_count() const { return functional_lines_.size(); }

  std::optional<std::size_t> find_line(std::string_view name) const;

  // Per-line initial values: primaries from `primary_inputs` (in primary
  // order), constants from their roles. Throws ArityError on width
  // mismatch.
  std::vector<std::uint8_t> initial_lines(const BitVector& primary_inputs) const;

  // Applies the cascade to a full line vector (roles ignored). This is the
  // raw evaluation primitive used by the verifiers and the fault injector.
  std::vector<std::uint8_t> run(std::vector<std::uint8_t> line_values) const;

  // Full simulation: role-initialized lines through the cascade, returning
  // the functional outputs in line order.
  BitVector simulate(const BitVector& primary_inputs) const;

  // Same lines in a new order; new_to_old[i] is the old index of the line
  // placed at position i. Gate bindings are remapped. Used to put composed
  // netlists into a canonical primary-input order.
  Netlist reordered(const std::vector<std::size_t>& new_to_old) const;

  // The reversed cascade of inverted gates. Running a netlist forward and
  // then its inversion restores any initial line vector. Line roles are
  // carried over verbatim.
  Netlist inverted() const;

 private:
  friend class NetlistBuilder;
  void index_lines();

  std::vector<Line> lines_;
  std::vector<GateInstance> gates_;
  std::vector<std::size_t> primary_lines_;
  std::vector<std::size_t> functional_lines_;
};

// Stepwise construction with validation; build() freezes the result.
class NetlistBuilder {
 public:
  std::size_t add_input(std::string name);
  std::size_t add_const(std::string name, int value);  // value is 0 or 1
  void set_output(std::size_t line, std::string name);
  void set_garbage(std::size_t line);
  void add_gate(std::shared_ptr<const Gate> gate,
                std::vector<std::size_t> lines);
  // Convenience lookup in the standard catalog.
  void add_gate(std::string_view catalog_name, std::vector<std::size_t> lines);

  std::size_t line_count() const { return net_.lines_.size(); }

  // Validates and returns the frozen netlist. The builder is left empty.
  Netlist build();

 private:
  std::size_t add_line(std::string name, LineInput input);
  Netlist net_;
};

// Renamed copy; lines/outputs not mentioned in the maps keep their names.
// The result must still have unique, valid names.
Netlist renamed(
    const Netlist& net,
    const std::unordered_map<std::string, std::string>& line_names,
    const std::unordered_map<std::string, std::string>& output_names);

// Position of the named line among the primary inputs / of the named
// output among the functional outputs, both counted in line order. Throws
// Error when the name is absent. These are the ordinal spaces used by
// compose().
std::size_t input_ordinal(const Netlist& net, std::string_view line_name);
std::size_t output_ordinal(const Netlist& net, std::string_view output_name);

// Exhaustive enumeration of functional outputs over all primary-input
// vectors in ascending integer order: result[i] = simulate(from_integer(i)).
// Throws CapacityError above kExhaustivePrimaryBound.
std::vector<BitVector> truth_table(const Netlist& net);

struct ParityVerdict {
  bool preserving = true;
  // Structural mode: index of the first gate instance whose gate is not
  // parity-preserving.
  std::optional<std::size_t> offending_gate;
  // Exhaustive mode: first primary-input vector whose final line parity
  // differs from its initial line parity.
  std::optional<BitVector> counterexample;
};

// Structural check: every gate preserves parity. Sound for the whole
// netlist because a cascade of parity-preserving bijections preserves the
// XOR of all line values.
ParityVerdict verify_parity_structural(const Netlist& net);

// Exhaustive check over all primary-input assignments, constants included
// on both sides. Throws CapacityError above kExhaustivePrimaryBound.
ParityVerdict verify_parity_exhaustive(const Netlist& net);

// True iff the whole-line-vector map (constants treated as free inputs) is
// a bijection; false exactly when some gate's table is non-bijective.
// Throws CapacityError above kExhaustiveLineBound.
bool verify_bijective(const Netlist& net);

// The structural cost metrics. Depth is the levelized longest chain: a
// gate's level is 1 + the maximum level among earlier gates sharing any
// line, and the depth is the maximum level (0 for an empty cascade).
// quantum_cost is the per-gate sum, or nullopt if any gate's cost is
// unspecified.
struct CostReport {
  std::size_t gate_count = 0;
  std::size_t garbage_outputs = 0;
  std::size_t constant_inputs = 0;
  std::size_t line_count = 0;
  std::size_t depth = 0;
  std::optional<std::uint64_t> quantum_cost;
};

CostReport cost_report(const Netlist& net);

// One functional output of `first` feeding one primary input of `second`;
// both sides are ordinals (position among functional outputs / primary
// inputs in line order), not line indices.
struct PortConnection {
  std::size_t output_ordinal;
  std::size_t input_ordinal;
};

// Serial composition: second's connected primary inputs are merged onto
// first's connected output lines, so simulating the result equals feeding
// first's outputs into second. A merged line keeps first's name and input
// role and takes second's output role. Unconnected lines of second are
// appended (auto-renamed on name collisions). Gate counts, constant inputs
// and quantum costs add. Throws WiringError on out-of-range or duplicate
// ordinals.
Netlist compose(const Netlist& first, const Netlist& second,
                const std::vector<PortConnection>& connections);

// Collapses a whole netlist into a single gate over its lines (line i ->
// port i). Throws CapacityError when the line count exceeds kMaxGateArity.
Gate flatten(const Netlist& net, std::string name,
             std::optional<std::uint32_t> quantum_cost = std::nullopt);

}  // namespace revnet

#endif  // REVNET_NETLIST_HPP_
