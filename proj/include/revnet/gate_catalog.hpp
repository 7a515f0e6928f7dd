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

#ifndef REVNET_GATE_CATALOG_HPP_
#define REVNET_GATE_CATALOG_HPP_

#include <memory>
#include <string_view>
#include <vector>

#include "revnet/gate.hpp"

namespace revnet {

// The fixed library of standard gates, addressable by uppercase name.
//
// Name      Arity  Outputs (port 0 first)                 QC   Parity
// FEYNMAN   2      A, A^B                                 1    no
// F2G       3      A, A^B, A^C                            2    yes
// TOFFOLI   3      A, B, AB^C                             5    no
// PERES     3      A, A^B, AB^C                           4    no
// FREDKIN   3      A, A'B^AC, A'C^AB                      5    yes
// NFT       3      A^B, B'C^AC', BC^AC'                   5    yes
// IG        4      A, A^B, AB^C, AB'^D                    -    yes
// PPPG      5      see gate_catalog.cpp                   -    yes
// F2PG      5      see gate_catalog.cpp                   -    yes
//
// PPPG and F2PG are the 5x5 full-adder gates: with the last two inputs held
// at 0, output 2 is A^B^C and output 3 is the majority of (A,B,C). Every
// entry is validated at first use: all must be bijective, and exactly
// {F2G, FREDKIN, NFT, IG, PPPG, F2PG} must preserve parity. The catalog is
// immutable and safe to read from multiple threads.
class GateCatalog {
 public:
  static const GateCatalog& instance();

  // Entries in the fixed order of the table above.
  const std::vector<std::shared_ptr<const Gate>>& gates() const {
    return gates_;
  }

  // nullptr when no entry has that name.
  std::shared_ptr<const Gate> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  GateCatalog(const GateCatalog&) = delete;
  GateCatalog& operator=(const GateCatalog&) = delete;

 private:
  GateCatalog();
  std::vector<std::shared_ptr<const Gate>> gates_;
};

}  // namespace revnet

#endif  // REVNET_GATE_CATALOG_HPP_
