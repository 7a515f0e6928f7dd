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

#ifndef REVNET_BIT_VECTOR_HPP_
#define REVNET_BIT_VECTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revnet {

// Fixed-width ordered sequence of bits. Index 0 is the least significant
// bit wherever an integer interpretation exists; to_string() and parse()
// use the opposite, human-readable order (most significant first).
//
// Width 0 is permitted as the degenerate input vector of a netlist without
// primary inputs; circuit values always have width >= 1.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t width) : bits_(width, 0) {}

  // Little-endian integer conversion; width must be <= 64 and the value
  // must fit in `width` bits.
  static BitVector from_integer(std::uint64_t value, std::size_t width);

  // Inverse of to_string(): most significant bit first, characters '0'/'1'.
  static BitVector parse(std::string_view text);

  std::size_t width() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t i) const { return bits_.at(i); }
  void set_bit(std::size_t i, int value);

  std::uint64_t to_integer() const;  // width must be <= 64
  int parity() const;                // XOR fold of all bits
  std::string to_string() const;     // most significant bit first

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace revnet

#endif  // REVNET_BIT_VECTOR_HPP_
