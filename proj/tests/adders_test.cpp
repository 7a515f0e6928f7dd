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

#include "revnet/adders.hpp"

#include <cstdint>
#include <string>

#include "doctest.h"
#include "revnet/errors.hpp"

namespace revnet {
namespace {

struct CostCells {
  std::size_t gates, garbage, constants;
};

CostCells cells_of(const Netlist& net) {
  const CostReport r = cost_report(net);
  return {r.gate_count, r.garbage_outputs, r.constant_inputs};
}

bool operator==(const CostCells& a, const CostCells& b) {
  return a.gates == b.gates && a.garbage == b.garbage &&
         a.constants == b.constants;
}

TEST_CASE("variant tags round trip") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CHECK(parse_variant_tag(variant_tag(variant)) == variant);
  }
  CHECK(variant_tag(FtfaVariant::kComposite1214) == "c1214");
  CHECK(variant_tag(FtfaVariant::kPppg) == "pppg");
  CHECK_FALSE(parse_variant_tag("nope").has_value());
  CHECK_FALSE(parse_variant_tag("").has_value());
}

TEST_CASE("every full adder cell implements the eight row oracle") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    const Netlist net = build_ftfa(variant);
    CHECK(net.primary_count() == 3);
    CHECK(net.functional_count() == 2);
    for (std::uint32_t x = 0; x < 8; ++x) {
      const int a = x & 1, b = (x >> 1) & 1, cin = (x >> 2) & 1;
      // Outputs in line order: sum first, then carry.
      const BitVector out = net.simulate(BitVector::from_integer(x, 3));
      CHECK(static_cast<int>(out.to_integer()) == a + b + cin);
    }
    CHECK(verify_parity_structural(net).preserving);
    CHECK(verify_parity_exhaustive(net).preserving);
    CHECK(verify_bijective(net));
  }
}

TEST_CASE("full adder cells have the expected cost cells") {
  CHECK(cells_of(build_ftfa(FtfaVariant::kComposite1214)) ==
        CostCells{8, 10, 9});
  CHECK(cells_of(build_ftfa(FtfaVariant::kComposite1212)) ==
        CostCells{6, 6, 5});
  CHECK(cells_of(build_ftfa(FtfaVariant::kIg)) == CostCells{2, 3, 2});
  CHECK(cells_of(build_ftfa(FtfaVariant::kPppg)) == CostCells{1, 3, 2});
  CHECK(cells_of(build_ftfa(FtfaVariant::kF2pg)) == CostCells{1, 3, 2});
}

TEST_CASE("composite cells carry exact quantum costs") {
  CHECK(cost_report(build_ftfa(FtfaVariant::kComposite1214)).quantum_cost ==
        std::uint64_t{22});
  CHECK(cost_report(build_ftfa(FtfaVariant::kComposite1212)).quantum_cost ==
        std::uint64_t{18});
  // The single-gate and chained-gate cells use gates without a specified
  // cost.
  CHECK_FALSE(cost_report(build_ftfa(FtfaVariant::kIg)).quantum_cost);
  CHECK_FALSE(cost_report(build_ftfa(FtfaVariant::kPppg)).quantum_cost);
  CHECK_FALSE(cost_report(build_ftfa(FtfaVariant::kF2pg)).quantum_cost);
}

TEST_CASE("ripple adder matches integer addition") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    for (std::size_t n = 1; n <= 3; ++n) {
      const Netlist net = build_rca(n, variant);
      CHECK(net.primary_count() == 2 * n + 1);
      CHECK(net.functional_count() == n + 1);
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
          for (std::uint64_t cin = 0; cin < 2; ++cin) {
            const std::uint64_t packed = a | (b << n) | (cin << (2 * n));
            const BitVector out =
                net.simulate(BitVector::from_integer(packed, 2 * n + 1));
            CHECK(out.to_integer() == a + b + cin);
          }
        }
      }
    }
  }
}

TEST_CASE("ripple adder uses the canonical line order") {
  const Netlist net = build_rca(3, FtfaVariant::kPppg);
  const char* expected[] = {"a0", "a1", "a2", "b0", "b1", "b2", "cin"};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(net.lines()[net.primary_lines()[i]].name == expected[i]);
    CHECK(net.primary_lines()[i] == i);
  }
  const char* outputs[] = {"f0", "f1", "f2", "cout"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(net.lines()[net.functional_lines()[i]].output.name == outputs[i]);
  }
}

TEST_CASE("ripple adder costs scale linearly") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    const CostCells cell = cells_of(build_ftfa(variant));
    for (std::size_t n = 1; n <= 4; ++n) {
      const CostCells rca = cells_of(build_rca(n, variant));
      CHECK(rca.gates == n * cell.gates);
      CHECK(rca.garbage == n * cell.garbage);
      CHECK(rca.constants == n * cell.constants);
    }
  }
}

TEST_CASE("ripple adder stays parity preserving and bijective") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    const Netlist net = build_rca(2, variant);
    CHECK(verify_parity_structural(net).preserving);
    CHECK(verify_parity_exhaustive(net).preserving);
    if (net.line_count() <= kExhaustiveLineBound) {
      CHECK(verify_bijective(net));
    }
  }
}

TEST_CASE("zero width adders are rejected") {
  CHECK_THROWS_AS(build_rca(0, FtfaVariant::kPppg), Error);
}

}  // namespace
}  // namespace revnet
