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

#include <random>
#include <string>

#include "revnet/errors.hpp"

namespace revnet {

namespace {

void validate_site(const Netlist& net, const FaultSite& site) {
  if (site.gate_index == FaultSite::kInput) {
    if (site.position >= net.line_count()) {
      throw FaultSiteError("input fault line index " +
                           std::to_string(site.position) + " out of range");
    }
    return;
  }
  if (site.gate_index < 0 ||
      static_cast<std::size_t>(site.gate_index) >= net.gates().size()) {
    throw FaultSiteError("fault gate index " +
                         std::to_string(site.gate_index) + " out of range");
  }
  const GateInstance& inst =
      net.gates()[static_cast<std::size_t>(site.gate_index)];
  if (site.position >= inst.lines.size()) {
    throw FaultSiteError("fault port index " + std::to_string(site.position) +
                         " out of range for gate '" + inst.gate->name() + "'");
  }
}

std::uint8_t parity_of(const std::vector<std::uint8_t>& values) {
  std::uint8_t parity = 0;
  for (std::uint8_t v : values) parity ^= (v & 1u);
  return parity;
}

// The cascade with one flip woven in; `values` are initial line values.
std::vector<std::uint8_t> run_with_fault(const Netlist& net,
                                         std::vector<std::uint8_t> values,
                                         const FaultSite& site) {
  if (site.gate_index == FaultSite::kInput) {
    values[site.position] ^= 1u;
  }
  const std::vector<GateInstance>& gates = net.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const GateInstance& inst = gates[g];
    std::uint32_t packed = 0;
    for (std::size_t p = 0; p < inst.lines.size(); ++p) {
      packed |= static_cast<std::uint32_t>(values[inst.lines[p]] & 1u) << p;
    }
    const std::uint32_t image = inst.gate->apply_bits(packed);
    for (std::size_t p = 0; p < inst.lines.size(); ++p) {
      values[inst.lines[p]] = static_cast<std::uint8_t>((image >> p) & 1u);
    }
    if (static_cast<std::ptrdiff_t>(g) == site.gate_index) {
      values[inst.lines[site.position]] ^= 1u;
    }
  }
  return values;
}

FaultScanReport scan(const Netlist& net,
                     const std::vector<BitVector>& vectors) {
  // The reference parity is taken from the fault-free initial lines; it
  // equals the fault-free final parity on parity-preserving netlists.
  std::vector<std::uint8_t> reference(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    reference[i] = parity_of(net.initial_lines(vectors[i]));
  }
  FaultScanReport report;
  for (const FaultSite& site : enumerate_fault_sites(net)) {
    SiteResult result;
    result.site = site;
    result.vectors_tested = vectors.size();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const std::vector<std::uint8_t> final_values =
          run_with_fault(net, net.initial_lines(vectors[i]), site);
      if (parity_of(final_values) != reference[i]) {
        ++result.detected;
      } else if (!result.first_undetected.has_value()) {
        result.first_undetected = vectors[i];
      }
    }
    report.total_injections += result.vectors_tested;
    report.total_detected += result.detected;
    report.sites.push_back(std::move(result));
  }
  return report;
}

}  // namespace

std::vector<FaultSite> enumerate_fault_sites(const Netlist& net) {
  std::vector<FaultSite> sites;
  for (std::size_t line = 0; line < net.line_count(); ++line) {
    sites.push_back(FaultSite{FaultSite::kInput, line});
  }
  for (std::size_t g = 0; g < net.gates().size(); ++g) {
    for (std::size_t p = 0; p < net.gates()[g].lines.size(); ++p) {
      sites.push_back(FaultSite{static_cast<std::ptrdiff_t>(g), p});
    }
  }
  return sites;
}

std::vector<std::uint8_t> simulate_with_fault(const Netlist& net,
                                              const BitVector& primary_inputs,
                                              const FaultSite& site) {
  validate_site(net, site);
  return run_with_fault(net, net.initial_lines(primary_inputs), site);
}

bool fault_detected(const Netlist& net, const BitVector& primary_inputs,
                    const FaultSite& site) {
  validate_site(net, site);
  const std::uint8_t reference = parity_of(net.initial_lines(primary_inputs));
  return parity_of(run_with_fault(net, net.initial_lines(primary_inputs),
                                  site)) != reference;
}

FaultScanReport fault_scan_exhaustive(const Netlist& net) {
  const std::size_t width = net.primary_count();
  if (width > kExhaustivePrimaryBound) {
    throw CapacityError("fault scan over " + std::to_string(width) +
                        " primary inputs exceeds the exhaustive bound");
  }
  std::vector<BitVector> vectors;
  vectors.reserve(std::size_t{1} << width);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
    vectors.push_back(BitVector::from_integer(x, width));
  }
  return scan(net, vectors);
}

FaultScanReport fault_scan_sampled(const Netlist& net, std::uint64_t samples,
                                   std::uint64_t seed) {
  std::mt19937 engine(static_cast<std::mt19937::result_type>(seed));
  std::vector<BitVector> vectors;
  vectors.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    BitVector v(net.primary_count());
    for (std::size_t bit = 0; bit < v.width(); ++bit) {
      v.set_bit(bit, static_cast<int>(engine() & 1u));
    }
    vectors.push_back(std::move(v));
  }
  return scan(net, vectors);
}

}  // namespace revnet
