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

#ifndef REVNET_GATE_HPP_
#define REVNET_GATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revnet/bit_vector.hpp"

namespace revnet {

// Upper bound on gate arity. Keeps image tables (2^N entries) and the
// exhaustive predicates cheap; every catalog gate is far below it.
inline constexpr std::size_t kMaxGateArity = 12;

// Names usable in the netlist text format: [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_name(std::string_view name);

// An N-input N-output gate stored as an explicit image table over the 2^N
// input space. Port 0 is the least significant bit of the table index on
// both sides. The table is a total function but not necessarily a
// permutation: inline gates from the text format may be non-bijective and
// are reported as such by the checkers. Catalog gates are validated
// bijections. Instances are immutable; apply is a pure function, so gates
// are safe to share across threads.
class Gate {
 public:
  Gate(std::string name, std::size_t arity, std::vector<std::uint32_t> table,
       std::optional<std::uint32_t> quantum_cost);

  static Gate from_function(
      std::string name, std::size_t arity,
      const std::function<std::uint32_t(std::uint32_t)>& fn,
      std::optional<std::uint32_t> quantum_cost);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::optional<std::uint32_t> quantum_cost() const { return quantum_cost_; }

  // Image of a packed input; no width check (packed must be < 2^arity).
  std::uint32_t apply_bits(std::uint32_t packed) const {
    return table_[packed];
  }

  // Image of a bit vector; throws ArityError on width mismatch.
  BitVector apply(const BitVector& input) const;

 private:
  std::string name_;
  std::size_t arity_;
  std::vector<std::uint32_t> table_;
  std::optional<std::uint32_t> quantum_cost_;
};

BitVector apply(const Gate& gate, const BitVector& input);

// True iff every output vector has a unique pre-image (the table is a
// permutation of the 2^arity input space).
bool is_reversible(const Gate& gate);
bool is_reversible(const std::vector<std::uint32_t>& table, std::size_t arity);
// Throws CapacityError when arity exceeds kMaxGateArity.
bool is_reversible(const std::function<std::uint32_t(std::uint32_t)>& fn,
                   std::size_t arity);

// True iff the XOR of the input bits equals the XOR of the output bits for
// every one of the 2^arity inputs. Does not require bijectivity.
bool is_parity_preserving(const Gate& gate);

// Catalog constant; nullopt when the cost is unspecified.
std::optional<std::uint32_t> quantum_cost(const Gate& gate);

// Inverse permutation; quantum cost carried over unchanged. The name is
// kept for involutions and suffixed with "_INV" otherwise, so a printed
// netlist never claims a catalog name for a different table. Throws
// std::invalid_argument if the gate is not reversible.
Gate inverse(const Gate& gate);

}  // namespace revnet

#endif  // REVNET_GATE_HPP_
