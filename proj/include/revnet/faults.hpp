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

#ifndef REVNET_FAULTS_HPP_
#define REVNET_FAULTS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "revnet/bit_vector.hpp"
#include "revnet/netlist.hpp"

namespace revnet {

// A single transient bit flip. A fault is detected when the xor of all
// final line values differs from the xor of all fault-free initial line
// values; a netlist built purely from parity-preserving gates detects
// every single fault this way, because the flip inverts the running
// parity and nothing downstream can restore it.
struct FaultSite {
  // Sentinel gate index: the flip hits an initial line value (primary or
  // constant) before any gate fires.
  static constexpr std::ptrdiff_t kInput = -1;

  // Index of the gate right after which the flip happens, or kInput.
  std::ptrdiff_t gate_index = kInput;
  // Line index for input faults; port index of the gate otherwise.
  std::size_t position = 0;

  friend bool operator==(const FaultSite&, const FaultSite&) = default;
};

// Every site in a fixed deterministic order: input faults by line index,
// then for each gate in cascade order one fault per port.
std::vector<FaultSite> enumerate_fault_sites(const Netlist& net);

// Final line values with the flip injected. Throws FaultSiteError when
// the site does not exist in this netlist.
std::vector<std::uint8_t> simulate_with_fault(const Netlist& net,
                                              const BitVector& primary_inputs,
                                              const FaultSite& site);

// True when the parity check flags the injected fault for this input.
bool fault_detected(const Netlist& net, const BitVector& primary_inputs,
                    const FaultSite& site);

struct SiteResult {
  FaultSite site;
  std::uint64_t vectors_tested = 0;
  std::uint64_t detected = 0;
  // An input vector whose flip goes unnoticed, when one exists.
  std::optional<BitVector> first_undetected;

  bool all_detected() const { return detected == vectors_tested; }
};

struct FaultScanReport {
  std::vector<SiteResult> sites;
  std::uint64_t total_injections = 0;
  std::uint64_t total_detected = 0;

  bool all_detected() const { return total_detected == total_injections; }
  double detection_rate() const {
    return total_injections == 0
               ? 1.0
               : static_cast<double>(total_detected) /
                     static_cast<double>(total_injections);
  }
};

// Injects every site against every primary-input vector. Throws
// CapacityError above kExhaustivePrimaryBound.
FaultScanReport fault_scan_exhaustive(const Netlist& net);

// Injects every site against the same `samples` pseudo-random input
// vectors, drawn bit by bit from a seeded engine, so reports are
// reproducible.
FaultScanReport fault_scan_sampled(const Netlist& net, std::uint64_t samples,
                                   std::uint64_t seed = 1);

}  // namespace revnet

#endif  // REVNET_FAULTS_HPP_
