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

#ifndef REVNET_ADDERS_HPP_
#define REVNET_ADDERS_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "revnet/netlist.hpp"

namespace revnet {

// The interchangeable fault-tolerant full-adder cells. Every variant is a
// parity-preserving netlist computing sum = a ^ b ^ cin and
// cout = majority(a, b, cin); they differ in gate count, garbage outputs,
// constant inputs and quantum cost.
enum class FtfaVariant {
  // Cascade of two three-gate parity-preserving Toffoli realizations plus
  // two fan-out gates; every gate has a specified quantum cost.
  kComposite1214,
  // Same structure with the two-gate Toffoli realization.
  kComposite1212,
  // Two chained four-port gates.
  kIg,
  // One five-port adder gate.
  kPppg,
  // One five-port adder gate with a pass-through first port.
  kF2pg,
};

inline constexpr std::array<FtfaVariant, 5> kAllFtfaVariants = {
    FtfaVariant::kComposite1214, FtfaVariant::kComposite1212,
    FtfaVariant::kIg, FtfaVariant::kPppg, FtfaVariant::kF2pg};

// Stable short tags used by the command line and the cost tables:
// c1214, c1212, ig, pppg, f2pg.
std::string_view variant_tag(FtfaVariant variant);
std::optional<FtfaVariant> parse_variant_tag(std::string_view tag);

// One full-adder cell over primary inputs a, b, cin with outputs sum and
// cout. The sum lands on the cin line, the carry on the first ancilla, so
// cells chain into a ripple adder by feeding cout into the next cin.
Netlist build_ftfa(FtfaVariant variant);

// Ripple-carry adder over a0..a{n-1}, b0..b{n-1}, cin (canonical line
// order) with outputs f0..f{n-1}, cout: the binary sum a + b + cin. Built
// by composing full-adder cells along the carry chain; all cost metrics
// scale linearly in the width.
Netlist build_rca(std::size_t width, FtfaVariant variant);

}  // namespace revnet

#endif  // REVNET_ADDERS_HPP_
