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

#include "revnet/bit_vector.hpp"

#include <stdexcept>

#include "revnet/errors.hpp"

namespace revnet {

BitVector BitVector::from_integer(std::uint64_t value, std::size_t width) {
  if (width > 64) {
    throw CapacityError("bit width " + std::to_string(width) +
                        " exceeds the 64-bit integer range");
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) +
                                " bits");
  }
  BitVector v(width);
  for (std::size_t i = 0; i < width; ++i) {
    v.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1u);
  }
  return v;
}

BitVector BitVector::parse(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    // Leftmost character is the most significant bit.
    v.bits_[text.size() - 1 - i] = static_cast<std::uint8_t>(c - '0');
  }
  return v;
}

void BitVector::set_bit(std::size_t i, int value) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("bit value must be 0 or 1");
  }
  bits_.at(i) = static_cast<std::uint8_t>(value);
}

std::uint64_t BitVector::to_integer() const {
  if (width() > 64) {
    throw CapacityError("bit width " + std::to_string(width()) +
                        " exceeds the 64-bit integer range");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    value |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return value;
}

int BitVector::parity() const {
  int p = 0;
  for (std::uint8_t b : bits_) p ^= b;
  return p;
}

std::string BitVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    s[bits_.size() - 1 - i] = static_cast<char>('0' + bits_[i]);
  }
  return s;
}

}  // namespace revnet
