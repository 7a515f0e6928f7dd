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

#include "revnet/gate_catalog.hpp"

#include <stdexcept>

namespace revnet {
namespace {

std::uint32_t b(std::uint32_t v, unsigned p) { return (v >> p) & 1u; }

std::uint32_t feynman(std::uint32_t v) {
  const std::uint32_t a = b(v, 0), x = b(v, 1);
  return a | ((a ^ x) << 1);
}

std::uint32_t f2g(std::uint32_t v) {
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2);
  return a | ((a ^ x) << 1) | ((a ^ y) << 2);
}

std::uint32_t toffoli(std::uint32_t v) {
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2);
  return a | (x << 1) | (((a & x) ^ y) << 2);
}

std::uint32_t peres(std::uint32_t v) {
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2);
  return a | ((a ^ x) << 1) | (((a & x) ^ y) << 2);
}

std::uint32_t fredkin(std::uint32_t v) {
  // Controlled swap: port 0 is the control, outputs 1 and 2 are
  // A'B^AC and A'C^AB. Output 2 therefore acts as a 2:1 multiplexer
  // selecting B when A=1 and C when A=0.
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2);
  const std::uint32_t na = a ^ 1u;
  return a | ((((na & x) ^ (a & y))) << 1) | ((((na & y) ^ (a & x))) << 2);
}

std::uint32_t nft(std::uint32_t v) {
  // A^B, B'C^AC', BC^AC'. The column order here is canonical for this
  // library; any consistent order gives the same checkable properties.
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2);
  const std::uint32_t nx = x ^ 1u, ny = y ^ 1u;
  return (a ^ x) | ((((nx & y) ^ (a & ny))) << 1) |
         ((((x & y) ^ (a & ny))) << 2);
}

std::uint32_t ig(std::uint32_t v) {
  // A, A^B, AB^C, AB'^D. The fourth output is the unique completion that
  // makes the whole gate parity-preserving given the first three.
  const std::uint32_t a = b(v, 0), x = b(v, 1), y = b(v, 2), z = b(v, 3);
  return a | ((a ^ x) << 1) | (((a & x) ^ y) << 2) |
         (((a & (x ^ 1u)) ^ z) << 3);
}

std::uint32_t pppg(std::uint32_t v) {
  // Equals the flattened cascade of IG on ports (0,1,3,4) followed by IG on
  // ports (1,2,3,4). Closed form, with inputs (P,Q,R,S,T) and W = P^Q:
  //   P, W, W^R, WR^PQ^S, WR'^PQ'^T
  // With S=T=0 this is a full adder: output 2 = P^Q^R, output 3 = MAJ.
  const std::uint32_t p = b(v, 0), q = b(v, 1), r = b(v, 2), s = b(v, 3),
                      t = b(v, 4);
  const std::uint32_t w = p ^ q;
  const std::uint32_t o3 = (w & r) ^ (p & q) ^ s;
  const std::uint32_t o4 = (w & (r ^ 1u)) ^ (p & (q ^ 1u)) ^ t;
  return p | (w << 1) | ((w ^ r) << 2) | (o3 << 3) | (o4 << 4);
}

std::uint32_t f2pg(std::uint32_t v) {
  // A second 5x5 parity-preserving full-adder permutation, distinct from
  // PPPG. Inputs (P,Q,R,S,T), W = P^Q:
  //   P^R, W, W^R^S, W'(Q^T)^WR, W'R^W(Q^T)
  // Same adder contract as PPPG (SUM at output 2, MAJ at output 3 when
  // S=T=0). When R=0 output 0 equals P, which lets the gate sit on a
  // pass-through select line.
  const std::uint32_t p = b(v, 0), q = b(v, 1), r = b(v, 2), s = b(v, 3),
                      t = b(v, 4);
  const std::uint32_t w = p ^ q;
  const std::uint32_t nw = w ^ 1u;
  const std::uint32_t qt = q ^ t;
  const std::uint32_t o3 = (nw & qt) ^ (w & r);
  const std::uint32_t o4 = (nw & r) ^ (w & qt);
  return (p ^ r) | (w << 1) | ((w ^ r ^ s) << 2) | (o3 << 3) | (o4 << 4);
}

}  // namespace

GateCatalog::GateCatalog() {
  struct Entry {
    const char* name;
    std::size_t arity;
    std::uint32_t (*fn)(std::uint32_t);
    std::optional<std::uint32_t> qc;
    bool parity_preserving;
  };
  static constexpr Entry kEntries[] = {
      {"FEYNMAN", 2, feynman, 1, false},
      {"F2G", 3, f2g, 2, true},
      {"TOFFOLI", 3, toffoli, 5, false},
      {"PERES", 3, peres, 4, false},
      {"FREDKIN", 3, fredkin, 5, true},
      {"NFT", 3, nft, 5, true},
      {"IG", 4, ig, std::nullopt, true},
      {"PPPG", 5, pppg, std::nullopt, true},
      {"F2PG", 5, f2pg, std::nullopt, true},
  };
  for (const Entry& e : kEntries) {
    Gate gate = Gate::from_function(e.name, e.arity, e.fn, e.qc);
    if (!is_reversible(gate)) {
      throw std::logic_error(std::string("catalog gate ") + e.name +
                             " is not a bijection");
    }
    if (is_parity_preserving(gate) != e.parity_preserving) {
      throw std::logic_error(std::string("catalog gate ") + e.name +
                             " has the wrong parity-preservation property");
    }
    gates_.push_back(std::make_shared<const Gate>(std::move(gate)));
  }
}

const GateCatalog& GateCatalog::instance() {
  static const GateCatalog catalog;
  return catalog;
}

std::shared_ptr<const Gate> GateCatalog::find(std::string_view name) const {
  for (const auto& gate : gates_) {
    if (gate->name() == name) return gate;
  }
  return nullptr;
}

}  // namespace revnet
