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

#include "revnet/faults.hpp"

#include <cstdint>

#include "doctest.h"
#include "revnet/adders.hpp"
#include "revnet/alu.hpp"
#include "revnet/errors.hpp"

namespace revnet {
namespace {

// The classic copy circuit: one control, one zero ancilla, one xor gate.
// It is reversible but not parity preserving, so some flips are masked.
Netlist make_copy_circuit() {
  NetlistBuilder b;
  const std::size_t a = b.add_input("a");
  const std::size_t bb = b.add_const("b", 0);
  b.add_gate("FEYNMAN", {a, bb});
  b.set_output(a, "o0");
  b.set_output(bb, "o1");
  return b.build();
}

TEST_CASE("sites enumerate lines first, then gate ports in order") {
  const Netlist net = make_copy_circuit();
  const std::vector<FaultSite> sites = enumerate_fault_sites(net);
  REQUIRE(sites.size() == 4);
  CHECK(sites[0] == FaultSite{FaultSite::kInput, 0});
  CHECK(sites[1] == FaultSite{FaultSite::kInput, 1});
  CHECK(sites[2] == FaultSite{0, 0});
  CHECK(sites[3] == FaultSite{0, 1});
}

TEST_CASE("simulate_with_fault flips exactly one value") {
  const Netlist net = make_copy_circuit();
  const BitVector one = BitVector::parse("1");
  // Fault free: a=1 copies to both lines.
  CHECK(net.run(net.initial_lines(one)) == std::vector<std::uint8_t>{1, 1});
  // Input fault on a: the zeroed control copies zero.
  CHECK(simulate_with_fault(net, one, {FaultSite::kInput, 0}) ==
        std::vector<std::uint8_t>{0, 0});
  // Flip after the gate only affects the flipped port.
  CHECK(simulate_with_fault(net, one, {0, 1}) ==
        std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("invalid sites are rejected") {
  const Netlist net = make_copy_circuit();
  const BitVector one = BitVector::parse("1");
  CHECK_THROWS_AS(simulate_with_fault(net, one, {FaultSite::kInput, 2}),
                  FaultSiteError);
  CHECK_THROWS_AS(simulate_with_fault(net, one, {1, 0}), FaultSiteError);
  CHECK_THROWS_AS(simulate_with_fault(net, one, {0, 2}), FaultSiteError);
  CHECK_THROWS_AS(simulate_with_fault(net, one, {-2, 0}), FaultSiteError);
}

TEST_CASE("copy circuit masks half of all injected faults") {
  const Netlist net = make_copy_circuit();
  const FaultScanReport report = fault_scan_exhaustive(net);
  CHECK(report.sites.size() == 4);
  CHECK(report.total_injections == 8);
  CHECK(report.total_detected == 4);
  CHECK_FALSE(report.all_detected());
  CHECK(report.detection_rate() == doctest::Approx(0.5));
  // The flip of the control before the gate is masked when a = 0: the
  // wrong value is copied consistently and the parity balance is kept.
  const SiteResult& input_a = report.sites[0];
  CHECK(input_a.site == FaultSite{FaultSite::kInput, 0});
  CHECK(input_a.detected == 1);
  REQUIRE(input_a.first_undetected.has_value());
  CHECK(input_a.first_undetected->to_integer() == 0);
}

TEST_CASE("full adder cells detect every single fault") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    const FaultScanReport report = fault_scan_exhaustive(build_ftfa(variant));
    CHECK(report.all_detected());
    CHECK(report.detection_rate() == doctest::Approx(1.0));
    for (const SiteResult& site : report.sites) {
      CHECK(site.all_detected());
      CHECK_FALSE(site.first_undetected.has_value());
    }
  }
}

TEST_CASE("selector and single slice units detect every single fault") {
  CHECK(fault_scan_exhaustive(build_function_selector()).all_detected());
  CHECK(fault_scan_exhaustive(build_y_selector()).all_detected());
  CHECK(fault_scan_exhaustive(build_logic_unit(1)).all_detected());
  CHECK(fault_scan_exhaustive(build_arith_unit(1, FtfaVariant::kIg))
            .all_detected());
  CHECK(fault_scan_exhaustive(build_alu_design1(1, FtfaVariant::kPppg).net)
            .all_detected());
  CHECK(fault_scan_exhaustive(build_alu_design2(1, FtfaVariant::kF2pg).net)
            .all_detected());
}

TEST_CASE("exhaustive scans enforce the primary input bound") {
  NetlistBuilder b;
  for (std::size_t i = 0; i <= kExhaustivePrimaryBound; ++i) {
    b.add_input("a" + std::to_string(i));
  }
  CHECK_THROWS_AS(fault_scan_exhaustive(b.build()), CapacityError);
}

TEST_CASE("sampled scans are reproducible and honor the sample count") {
  const Netlist net = build_rca(2, FtfaVariant::kF2pg);
  const FaultScanReport first = fault_scan_sampled(net, 25, 7);
  const FaultScanReport second = fault_scan_sampled(net, 25, 7);
  REQUIRE(first.sites.size() == second.sites.size());
  CHECK(first.total_injections ==
        25 * static_cast<std::uint64_t>(first.sites.size()));
  for (std::size_t i = 0; i < first.sites.size(); ++i) {
    CHECK(first.sites[i].vectors_tested == 25);
    CHECK(first.sites[i].detected == second.sites[i].detected);
  }
  // A parity-preserving net detects all sampled faults as well.
  CHECK(first.all_detected());
}

TEST_CASE("sampled scan flags the masked copy fault eventually") {
  const FaultScanReport report =
      fault_scan_sampled(make_copy_circuit(), 64, 1);
  CHECK_FALSE(report.all_detected());
}

}  // namespace
}  // namespace revnet
