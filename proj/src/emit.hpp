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

// Internal slice emitters shared by the adder and arithmetic-logic-unit
// builders. Each emitter appends gates (and the ancilla lines it needs) to
// a builder in flight; `tag` suffixes the ancilla names so one builder can
// hold many slices.

#ifndef REVNET_SRC_EMIT_HPP_
#define REVNET_SRC_EMIT_HPP_

#include <string>
#include <vector>

#include "revnet/adders.hpp"
#include "revnet/netlist.hpp"

namespace revnet {
namespace internal {

struct FtfaLines {
  std::size_t sum;   // the line that ends up carrying a ^ b ^ c
  std::size_t cout;  // the line that ends up carrying the majority
};

// Full-adder cell on lines a, b, c. The sum lands on c; the carry lands on
// a fresh zero ancilla.
FtfaLines emit_ftfa(NetlistBuilder& builder, FtfaVariant variant,
                    std::size_t a, std::size_t b, std::size_t c,
                    const std::string& tag);

// Lines carrying src's initial value for `count` consumers, src itself
// included. Copies are made pairwise through three-port fan-out gates, so
// an odd surplus copy becomes garbage.
std::vector<std::size_t> emit_fanout(NetlistBuilder& builder, std::size_t src,
                                     std::size_t count, const std::string& tag);

// One bitwise logic slice: returns the line carrying
// or / xor / and / not-a of (a, b) selected by (s1, s0). The select lines
// act as controls only and can be shared across slices.
std::size_t emit_logic_slice(NetlistBuilder& builder, std::size_t a,
                             std::size_t b, std::size_t s1, std::size_t s0,
                             const std::string& tag);

struct SelectorLines {
  std::size_t x;  // a | (s2 & ~s0 & (s1 ^ b))
  std::size_t y;  // (s0 & b) | (s1 & ~b)
  std::size_t z;  // ~s2 & c
};

// One function-selector slice feeding a full-adder cell: consumes s1 and
// s0 (they become the y carrier and garbage); a, b, s2 are preserved.
SelectorLines emit_selector_slice(NetlistBuilder& builder, std::size_t a,
                                  std::size_t b, std::size_t c, std::size_t s2,
                                  std::size_t s1, std::size_t s0,
                                  const std::string& tag);

}  // namespace internal
}  // namespace revnet

#endif  // REVNET_SRC_EMIT_HPP_
