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

#ifndef REVNET_ALU_HPP_
#define REVNET_ALU_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revnet/adders.hpp"
#include "revnet/netlist.hpp"

namespace revnet {

// Two parity-preserving arithmetic-logic-unit architectures with the same
// word-level contract, selected by s2 / s1 / s0:
//
//   s2 = 0 (arithmetic): f = a + y + cin mod 2^width with the operand
//     y = 0 / b / ~b / all-ones for s1 s0 = 00 / 01 / 10 / 11.
//   s2 = 1 (logic): f = a|b, a^b, a&b, ~a for s1 s0 = 00, 01, 10, 11;
//     cin is a don't care.
//
// Design one computes the arithmetic and logic words in parallel blocks
// and multiplexes per bit, so every operand and low select must be fed to
// both blocks. Design two rewrites both groups onto one adder chain
// through a per-bit function selector, needing each operand bit only once.
enum class AluDesign { kOne = 1, kTwo = 2 };

std::string_view design_name(AluDesign design);  // "1" or "2"
std::optional<AluDesign> parse_design(std::string_view text);

// The twelve functions of the select table, in table order.
enum class AluFunction {
  kTransfer,            // f = a                 (s2 s1 s0 = 000, cin 0)
  kIncrement,           // f = a + 1             (000, cin 1)
  kAdd,                 // f = a + b             (001, cin 0)
  kAddWithCarry,        // f = a + b + 1         (001, cin 1)
  kSubtractWithBorrow,  // f = a - b - 1         (010, cin 0)
  kSubtract,            // f = a - b             (010, cin 1)
  kDecrement,           // f = a - 1             (011, cin 0)
  kTransferSetCarry,    // f = a, carry forced   (011, cin 1)
  kOr,                  // f = a | b             (100)
  kXor,                 // f = a ^ b             (101)
  kAnd,                 // f = a & b             (110)
  kNotA,                // f = ~a                (111)
};

// Stable lower-case tag, e.g. "add-with-carry".
std::string_view alu_function_label(AluFunction function);

// Word-level reference value, reduced mod 2^width. width must be 1..63.
std::uint64_t eval_alu_function(AluFunction function, std::uint64_t a,
                                std::uint64_t b, std::size_t width);

// Reference value for a raw select assignment (cin ignored when s2 = 1).
std::uint64_t alu_reference(int s2, int s1, int s0, int cin, std::uint64_t a,
                            std::uint64_t b, std::size_t width);

struct FunctionTableRow {
  AluFunction function;
  int s2, s1, s0;
  // Fixed for arithmetic rows; nullopt marks the carry as a don't care.
  std::optional<int> cin;
};

// The full twelve-row select table, its eight arithmetic rows, and its
// four logic rows, in (s2, s1, s0, cin) order.
const std::vector<FunctionTableRow>& alu_function_table();
const std::vector<FunctionTableRow>& arith_function_table();
const std::vector<FunctionTableRow>& logic_function_table();

// One operand-select cell: y = (s0 & b) | (s1 & ~b) lands on the s1 line.
Netlist build_y_selector();

// Adder chain with per-bit operand selection. Lines a0.., b0.., cin, s1,
// s0; outputs f0.., cout with f + 2^width cout = a + y + cin.
Netlist build_arith_unit(std::size_t width, FtfaVariant variant);

// Bitwise block over a0.., b0.., s1, s0 with outputs f0... The select
// lines act as shared controls.
Netlist build_logic_unit(std::size_t width);

// One function-selector slice over a, b, c, s2, s1, s0. Its three outputs
// come back in line order z, y, x where x = a | (s2 & ~s0 & (s1 ^ b)),
// y = (s0 & b) | (s1 & ~b) and z = ~s2 & c; feeding (x, y, z) to a
// full-adder cell yields one bit of either function group.
Netlist build_function_selector();

// A built unit plus the line bindings needed to drive it by word values.
// Design one feeds duplicated operands, so a bit may bind several lines.
struct AluCircuit {
  Netlist net;
  AluDesign design = AluDesign::kOne;
  FtfaVariant variant = FtfaVariant::kPppg;
  std::size_t width = 0;
  std::vector<std::vector<std::size_t>> a_lines;  // per operand bit
  std::vector<std::vector<std::size_t>> b_lines;
  std::size_t cin_line = 0;
  std::vector<std::size_t> s2_lines, s1_lines, s0_lines;

  // Primary-input vector realizing the given words and selects.
  BitVector pack_inputs(std::uint64_t a, std::uint64_t b, int cin, int s2,
                        int s1, int s0) const;

  struct WordResult {
    std::uint64_t f = 0;
    int cout = 0;
  };
  WordResult evaluate(std::uint64_t a, std::uint64_t b, int cin, int s2,
                      int s1, int s0) const;
};

AluCircuit build_alu_design1(std::size_t width, FtfaVariant variant);
AluCircuit build_alu_design2(std::size_t width, FtfaVariant variant);
AluCircuit build_alu(AluDesign design, std::size_t width, FtfaVariant variant);

// Row-by-row check of the select table against the reference semantics.
// Operand pairs are swept exhaustively up to width 8, sampled with a fixed
// seed above that; rows with a don't-care carry are run with both values.
struct RowVerification {
  FunctionTableRow row;
  bool passed = true;
  std::string detail;  // first mismatch, empty when passed
};

struct TableVerification {
  std::vector<RowVerification> rows;
  bool all_passed() const;
};

TableVerification verify_function_table(const AluCircuit& alu);

}  // namespace revnet

#endif  // REVNET_ALU_HPP_
