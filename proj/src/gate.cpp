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

#include "revnet/gate.hpp"

#include <bit>
#include <stdexcept>

#include "revnet/errors.hpp"

namespace revnet {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name.front())) return false;
  for (char c : name.substr(1)) {
    if (!tail(c)) return false;
  }
  return true;
}

Gate::Gate(std::string name, std::size_t arity,
           std::vector<std::uint32_t> table,
           std::optional<std::uint32_t> quantum_cost)
    : name_(std::move(name)),
      arity_(arity),
      table_(std::move(table)),
      quantum_cost_(quantum_cost) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid gate name: '" + name_ + "'");
  }
  if (arity_ == 0) {
    throw std::invalid_argument("gate arity must be at least 1");
  }
  if (arity_ > kMaxGateArity) {
    throw CapacityError("gate arity " + std::to_string(arity_) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxGateArity));
  }
  const std::size_t space = std::size_t{1} << arity_;
  if (table_.size() != space) {
    throw std::invalid_argument("gate table must have 2^arity entries");
  }
  for (std::uint32_t image : table_) {
    if (image >= space) {
      throw std::invalid_argument("gate table entry out of range");
    }
  }
}

Gate Gate::from_function(std::string name, std::size_t arity,
                         const std::function<std::uint32_t(std::uint32_t)>& fn,
                         std::optional<std::uint32_t> quantum_cost) {
  if (arity == 0 || arity > kMaxGateArity) {
    throw CapacityError("gate arity " + std::to_string(arity) +
                        " is outside the supported range");
  }
  std::vector<std::uint32_t> table(std::size_t{1} << arity);
  for (std::uint32_t i = 0; i < table.size(); ++i) table[i] = fn(i);
  return Gate(std::move(name), arity, std::move(table), quantum_cost);
}

BitVector Gate::apply(const BitVector& input) const {
  if (input.width() != arity_) {
    throw ArityError("gate " + name_ + " expects " + std::to_string(arity_) +
                     " bits, got " + std::to_string(input.width()));
  }
  std::uint32_t packed = 0;
  for (std::size_t p = 0; p < arity_; ++p) {
    packed |= static_cast<std::uint32_t>(input.bit(p)) << p;
  }
  const std::uint32_t image = table_[packed];
  BitVector out(arity_);
  for (std::size_t p = 0; p < arity_; ++p) {
    out.set_bit(p, static_cast<int>((image >> p) & 1u));
  }
  return out;
}

BitVector apply(const Gate& gate, const BitVector& input) {
  return gate.apply(input);
}

bool is_reversible(const std::vector<std::uint32_t>& table,
                   std::size_t arity) {
  if (arity > kMaxGateArity) {
    throw CapacityError("arity " + std::to_string(arity) +
                        " exceeds the exhaustive-check bound");
  }
  const std::size_t space = std::size_t{1} << arity;
  if (table.size() != space) return false;
  std::vector<bool> seen(space, false);
  for (std::uint32_t image : table) {
    if (image >= space || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

bool is_reversible(const Gate& gate) {
  return is_reversible(gate.table(), gate.arity());
}

bool is_reversible(const std::function<std::uint32_t(std::uint32_t)>& fn,
                   std::size_t arity) {
  if (arity == 0 || arity > kMaxGateArity) {
    throw CapacityError("arity " + std::to_string(arity) +
                        " exceeds the exhaustive-check bound");
  }
  const std::size_t space = std::size_t{1} << arity;
  std::vector<std::uint32_t> table(space);
  for (std::uint32_t i = 0; i < space; ++i) table[i] = fn(i);
  return is_reversible(table, arity);
}

bool is_parity_preserving(const Gate& gate) {
  const auto& table = gate.table();
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if ((std::popcount(i) & 1) != (std::popcount(table[i]) & 1)) return false;
  }
  return true;
}

std::optional<std::uint32_t> quantum_cost(const Gate& gate) {
  return gate.quantum_cost();
}

Gate inverse(const Gate& gate) {
  if (!is_reversible(gate)) {
    throw std::invalid_argument("gate " + gate.name() +
                                " is not reversible, no inverse exists");
  }
  const auto& table = gate.table();
  std::vector<std::uint32_t> inv(table.size());
  for (std::uint32_t i = 0; i < table.size(); ++i) inv[table[i]] = i;
  std::string name =
      inv == table ? gate.name() : gate.name() + std::string("_INV");
  return Gate(std::move(name), gate.arity(), std::move(inv),
              gate.quantum_cost());
}

}  // namespace revnet
