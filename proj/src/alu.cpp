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

#include "revnet/alu.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "emit.hpp"
#include "revnet/errors.hpp"

namespace revnet {

std::string_view design_name(AluDesign design) {
  return design == AluDesign::kOne ? "1" : "2";
}

std::optional<AluDesign> parse_design(std::string_view text) {
  if (text == "1") return AluDesign::kOne;
  if (text == "2") return AluDesign::kTwo;
  return std::nullopt;
}

std::string_view alu_function_label(AluFunction function) {
  switch (function) {
    case AluFunction::kTransfer:
      return "transfer";
    case AluFunction::kIncrement:
      return "increment";
    case AluFunction::kAdd:
      return "add";
    case AluFunction::kAddWithCarry:
      return "add-with-carry";
    case AluFunction::kSubtractWithBorrow:
      return "subtract-with-borrow";
    case AluFunction::kSubtract:
      return "subtract";
    case AluFunction::kDecrement:
      return "decrement";
    case AluFunction::kTransferSetCarry:
      return "transfer-set-carry";
    case AluFunction::kOr:
      return "or";
    case AluFunction::kXor:
      return "xor";
    case AluFunction::kAnd:
      return "and";
    case AluFunction::kNotA:
      return "not-a";
  }
  throw Error("unknown function");
}

namespace {

std::uint64_t width_mask(std::size_t width) {
  if (width == 0 || width > 63) {
    throw CapacityError("word width must be between 1 and 63");
  }
  return (std::uint64_t{1} << width) - 1;
}

}  // namespace

std::uint64_t eval_alu_function(AluFunction function, std::uint64_t a,
                                std::uint64_t b, std::size_t width) {
  const std::uint64_t mask = width_mask(width);
  a &= mask;
  b &= mask;
  switch (function) {
    case AluFunction::kTransfer:
    case AluFunction::kTransferSetCarry:
      return a;
    case AluFunction::kIncrement:
      return (a + 1) & mask;
    case AluFunction::kAdd:
      return (a + b) & mask;
    case AluFunction::kAddWithCarry:
      return (a + b + 1) & mask;
    case AluFunction::kSubtractWithBorrow:
      return (a - b - 1) & mask;
    case AluFunction::kSubtract:
      return (a - b) & mask;
    case AluFunction::kDecrement:
      return (a - 1) & mask;
    case AluFunction::kOr:
      return a | b;
    case AluFunction::kXor:
      return a ^ b;
    case AluFunction::kAnd:
      return a & b;
    case AluFunction::kNotA:
      return ~a & mask;
  }
  throw Error("unknown function");
}

std::uint64_t alu_reference(int s2, int s1, int s0, int cin, std::uint64_t a,
                            std::uint64_t b, std::size_t width) {
  const std::uint64_t mask = width_mask(width);
  a &= mask;
  b &= mask;
  if (s2 == 0) {
    const std::uint64_t y[] = {0, b, ~b & mask, mask};
    return (a + y[2 * s1 + s0] + static_cast<std::uint64_t>(cin)) & mask;
  }
  const std::uint64_t f[] = {a | b, a ^ b, a & b, ~a & mask};
  return f[2 * s1 + s0];
}

const std::vector<FunctionTableRow>& alu_function_table() {
  static const std::vector<FunctionTableRow> kTable = {
      {AluFunction::kTransfer, 0, 0, 0, 0},
      {AluFunction::kIncrement, 0, 0, 0, 1},
      {AluFunction::kAdd, 0, 0, 1, 0},
      {AluFunction::kAddWithCarry, 0, 0, 1, 1},
      {AluFunction::kSubtractWithBorrow, 0, 1, 0, 0},
      {AluFunction::kSubtract, 0, 1, 0, 1},
      {AluFunction::kDecrement, 0, 1, 1, 0},
      {AluFunction::kTransferSetCarry, 0, 1, 1, 1},
      {AluFunction::kOr, 1, 0, 0, std::nullopt},
      {AluFunction::kXor, 1, 0, 1, std::nullopt},
      {AluFunction::kAnd, 1, 1, 0, std::nullopt},
      {AluFunction::kNotA, 1, 1, 1, std::nullopt},
  };
  return kTable;
}

const std::vector<FunctionTableRow>& arith_function_table() {
  static const std::vector<FunctionTableRow> kRows(
      alu_function_table().begin(), alu_function_table().begin() + 8);
  return kRows;
}

const std::vector<FunctionTableRow>& logic_function_table() {
  static const std::vector<FunctionTableRow> kRows(
      alu_function_table().begin() + 8, alu_function_table().end());
  return kRows;
}

namespace internal {

std::size_t emit_logic_slice(NetlistBuilder& b, std::size_t a, std::size_t bb,
                             std::size_t s1, std::size_t s0,
                             const std::string& tag) {
  const std::size_t z1 = b.add_const("z1" + tag, 0);
  const std::size_t z2 = b.add_const("z2" + tag, 0);
  const std::size_t z3 = b.add_const("z3" + tag, 0);
  const std::size_t z4 = b.add_const("z4" + tag, 0);
  const std::size_t z5 = b.add_const("z5" + tag, 0);
  const std::size_t one1 = b.add_const("one1" + tag, 1);
  const std::size_t one2 = b.add_const("one2" + tag, 1);
  b.add_gate("F2G", {a, bb, z1});        // b := a ^ b, z1 := a
  b.add_gate("F2G", {a, one1, z2});      // one1 := ~a, z2 := a
  b.add_gate("F2PG", {bb, z2, z3, z4, z5});  // z5 := a & b, b preserved
  b.add_gate("FREDKIN", {bb, z1, one2});     // z1 := a | b
  b.add_gate("FREDKIN", {s0, z1, bb});       // z1 := s0 ? a^b : a|b
  b.add_gate("FREDKIN", {s0, z5, one1});     // z5 := s0 ? ~a : a&b
  b.add_gate("FREDKIN", {s1, z1, z5});       // z1 := the selected function
  return z1;
}

SelectorLines emit_selector_slice(NetlistBuilder& b, std::size_t a,
                                  std::size_t bb, std::size_t c,
                                  std::size_t s2, std::size_t s1,
                                  std::size_t s0, const std::string& tag) {
  const std::size_t z1 = b.add_const("z1" + tag, 0);
  const std::size_t z2 = b.add_const("z2" + tag, 0);
  const std::size_t z3 = b.add_const("z3" + tag, 0);
  const std::size_t z4 = b.add_const("z4" + tag, 0);
  const std::size_t z5 = b.add_const("z5" + tag, 0);
  const std::size_t z6 = b.add_const("z6" + tag, 0);
  const std::size_t z7 = b.add_const("z7" + tag, 0);
  const std::size_t one1 = b.add_const("one1" + tag, 1);
  const std::size_t z8 = b.add_const("z8" + tag, 0);
  b.add_gate("F2G", {bb, z1, z2});            // z1 := b, z2 := b
  b.add_gate("F2G", {s1, z1, z3});            // z1 := s1 ^ b
  b.add_gate("F2PG", {s0, z1, z4, z5, z6});   // z6 := ~s0 & (s1 ^ b)
  b.add_gate("FREDKIN", {s2, z7, z6});        // z7 := s2 & z6
  b.add_gate("FREDKIN", {a, z7, one1});       // z7 := a | z7 = x
  b.add_gate("FREDKIN", {bb, s1, s0});        // s1 := y
  b.add_gate("FREDKIN", {s2, c, z8});         // c := ~s2 & c = z
  return {z7, s1, c};
}

}  // namespace internal

Netlist build_y_selector() {
  NetlistBuilder b;
  const std::size_t bb = b.add_input("b");
  const std::size_t s1 = b.add_input("s1");
  const std::size_t s0 = b.add_input("s0");
  b.add_gate("FREDKIN", {bb, s1, s0});
  b.set_output(s1, "y");
  return b.build();
}

Netlist build_arith_unit(std::size_t width, FtfaVariant variant) {
  if (width == 0) throw Error("unit width must be at least 1");
  NetlistBuilder b;
  std::vector<std::size_t> a(width), bb(width);
  for (std::size_t i = 0; i < width; ++i) {
    a[i] = b.add_input("a" + std::to_string(i));
  }
  for (std::size_t i = 0; i < width; ++i) {
    bb[i] = b.add_input("b" + std::to_string(i));
  }
  const std::size_t cin = b.add_input("cin");
  const std::size_t s1 = b.add_input("s1");
  const std::size_t s0 = b.add_input("s0");
  const std::vector<std::size_t> s1c = internal::emit_fanout(b, s1, width, "s1");
  const std::vector<std::size_t> s0c = internal::emit_fanout(b, s0, width, "s0");
  std::size_t carry = cin;
  for (std::size_t i = 0; i < width; ++i) {
    const std::string tag = "_" + std::to_string(i);
    // y_i lands on the s1 carrier and becomes the second adder operand.
    b.add_gate("FREDKIN", {bb[i], s1c[i], s0c[i]});
    const internal::FtfaLines cell =
        internal::emit_ftfa(b, variant, a[i], s1c[i], carry, tag);
    b.set_output(cell.sum, "f" + std::to_string(i));
    carry = cell.cout;
  }
  b.set_output(carry, "cout");
  return b.build();
}

Netlist build_logic_unit(std::size_t width) {
  if (width == 0) throw Error("unit width must be at least 1");
  NetlistBuilder b;
  std::vector<std::size_t> a(width), bb(width);
  for (std::size_t i = 0; i < width; ++i) {
    a[i] = b.add_input("a" + std::to_string(i));
  }
  for (std::size_t i = 0; i < width; ++i) {
    bb[i] = b.add_input("b" + std::to_string(i));
  }
  const std::size_t s1 = b.add_input("s1");
  const std::size_t s0 = b.add_input("s0");
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t f = internal::emit_logic_slice(
        b, a[i], bb[i], s1, s0, "_" + std::to_string(i));
    b.set_output(f, "f" + std::to_string(i));
  }
  return b.build();
}

Netlist build_function_selector() {
  NetlistBuilder b;
  const std::size_t a = b.add_input("a");
  const std::size_t bb = b.add_input("b");
  const std::size_t c = b.add_input("c");
  const std::size_t s2 = b.add_input("s2");
  const std::size_t s1 = b.add_input("s1");
  const std::size_t s0 = b.add_input("s0");
  const internal::SelectorLines out =
      internal::emit_selector_slice(b, a, bb, c, s2, s1, s0, "");
  b.set_output(out.x, "x");
  b.set_output(out.y, "y");
  b.set_output(out.z, "z");
  return b.build();
}

AluCircuit build_alu_design1(std::size_t width, FtfaVariant variant) {
  width_mask(width);  // bounds check
  AluCircuit alu;
  alu.design = AluDesign::kOne;
  alu.variant = variant;
  alu.width = width;
  alu.a_lines.resize(width);
  alu.b_lines.resize(width);

  NetlistBuilder b;
  std::vector<std::size_t> aa(width), ab(width), la(width), lb(width);
  for (std::size_t i = 0; i < width; ++i) {
    aa[i] = b.add_input("aa" + std::to_string(i));
  }
  for (std::size_t i = 0; i < width; ++i) {
    ab[i] = b.add_input("ab" + std::to_string(i));
  }
  alu.cin_line = b.add_input("cin");
  const std::size_t s1a = b.add_input("s1a");
  const std::size_t s0a = b.add_input("s0a");
  for (std::size_t i = 0; i < width; ++i) {
    la[i] = b.add_input("la" + std::to_string(i));
  }
  for (std::size_t i = 0; i < width; ++i) {
    lb[i] = b.add_input("lb" + std::to_string(i));
  }
  const std::size_t s1l = b.add_input("s1l");
  const std::size_t s0l = b.add_input("s0l");
  const std::size_t s2 = b.add_input("s2");
  for (std::size_t i = 0; i < width; ++i) {
    alu.a_lines[i] = {aa[i], la[i]};
    alu.b_lines[i] = {ab[i], lb[i]};
  }
  alu.s1_lines = {s1a, s1l};
  alu.s0_lines = {s0a, s0l};
  alu.s2_lines = {s2};

  const std::vector<std::size_t> s1c =
      internal::emit_fanout(b, s1a, width, "s1");
  const std::vector<std::size_t> s0c =
      internal::emit_fanout(b, s0a, width, "s0");
  std::size_t carry = alu.cin_line;
  std::vector<std::size_t> sums(width);
  for (std::size_t i = 0; i < width; ++i) {
    b.add_gate("FREDKIN", {ab[i], s1c[i], s0c[i]});
    const internal::FtfaLines cell = internal::emit_ftfa(
        b, variant, aa[i], s1c[i], carry, "_" + std::to_string(i));
    sums[i] = cell.sum;
    carry = cell.cout;
  }
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t fl = internal::emit_logic_slice(
        b, la[i], lb[i], s1l, s0l, "_l" + std::to_string(i));
    // Per-bit result select: the arithmetic line keeps f when s2 = 0.
    b.add_gate("FREDKIN", {s2, sums[i], fl});
    b.set_output(sums[i], "f" + std::to_string(i));
  }
  b.set_output(carry, "cout");
  alu.net = b.build();
  return alu;
}

AluCircuit build_alu_design2(std::size_t width, FtfaVariant variant) {
  width_mask(width);  // bounds check
  AluCircuit alu;
  alu.design = AluDesign::kTwo;
  alu.variant = variant;
  alu.width = width;
  alu.a_lines.resize(width);
  alu.b_lines.resize(width);

  NetlistBuilder b;
  std::vector<std::size_t> a(width), bb(width);
  for (std::size_t i = 0; i < width; ++i) {
    a[i] = b.add_input("a" + std::to_string(i));
    alu.a_lines[i] = {a[i]};
  }
  for (std::size_t i = 0; i < width; ++i) {
    bb[i] = b.add_input("b" + std::to_string(i));
    alu.b_lines[i] = {bb[i]};
  }
  alu.cin_line = b.add_input("cin");
  const std::size_t s2 = b.add_input("s2");
  const std::size_t s1 = b.add_input("s1");
  const std::size_t s0 = b.add_input("s0");
  alu.s2_lines = {s2};
  alu.s1_lines = {s1};
  alu.s0_lines = {s0};

  const std::vector<std::size_t> s1c = internal::emit_fanout(b, s1, width, "s1");
  const std::vector<std::size_t> s0c = internal::emit_fanout(b, s0, width, "s0");
  std::size_t carry = alu.cin_line;
  for (std::size_t i = 0; i < width; ++i) {
    const std::string tag = "_" + std::to_string(i);
    const internal::SelectorLines sel = internal::emit_selector_slice(
        b, a[i], bb[i], carry, s2, s1c[i], s0c[i], "_s" + std::to_string(i));
    const internal::FtfaLines cell =
        internal::emit_ftfa(b, variant, sel.x, sel.y, sel.z, tag);
    b.set_output(cell.sum, "f" + std::to_string(i));
    carry = cell.cout;
  }
  b.set_output(carry, "cout");
  alu.net = b.build();
  return alu;
}

AluCircuit build_alu(AluDesign design, std::size_t width, FtfaVariant variant) {
  return design == AluDesign::kOne ? build_alu_design1(width, variant)
                                   : build_alu_design2(width, variant);
}

BitVector AluCircuit::pack_inputs(std::uint64_t a, std::uint64_t b, int cin,
                                  int s2, int s1, int s0) const {
  const std::uint64_t mask = width_mask(width);
  a &= mask;
  b &= mask;
  BitVector inputs(net.primary_count());
  const std::vector<std::size_t>& primaries = net.primary_lines();
  const auto set_line = [&](std::size_t line, int value) {
    const auto it =
        std::lower_bound(primaries.begin(), primaries.end(), line);
    if (it == primaries.end() || *it != line) {
      throw WiringError("bound line is not a primary input");
    }
    inputs.set_bit(static_cast<std::size_t>(it - primaries.begin()), value);
  };
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t line : a_lines[i]) set_line(line, (a >> i) & 1);
    for (std::size_t line : b_lines[i]) set_line(line, (b >> i) & 1);
  }
  set_line(cin_line, cin);
  for (std::size_t line : s2_lines) set_line(line, s2);
  for (std::size_t line : s1_lines) set_line(line, s1);
  for (std::size_t line : s0_lines) set_line(line, s0);
  return inputs;
}

AluCircuit::WordResult AluCircuit::evaluate(std::uint64_t a, std::uint64_t b,
                                            int cin, int s2, int s1,
                                            int s0) const {
  const BitVector out = net.simulate(pack_inputs(a, b, cin, s2, s1, s0));
  // Outputs in line order are f0..f{width-1}, cout.
  WordResult result;
  for (std::size_t i = 0; i < width; ++i) {
    result.f |= static_cast<std::uint64_t>(out.bit(i)) << i;
  }
  result.cout = out.bit(width);
  return result;
}

bool TableVerification::all_passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RowVerification& r) { return r.passed; });
}

TableVerification verify_function_table(const AluCircuit& alu) {
  const std::uint64_t mask = width_mask(alu.width);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> operands;
  if (alu.width <= 8) {
    for (std::uint64_t a = 0; a <= mask; ++a) {
      for (std::uint64_t b = 0; b <= mask; ++b) operands.emplace_back(a, b);
    }
  } else {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1024; ++i) {
      operands.emplace_back(rng() & mask, rng() & mask);
    }
  }

  TableVerification verification;
  for (const FunctionTableRow& row : alu_function_table()) {
    RowVerification result{row, true, ""};
    const int cin_lo = row.cin.value_or(0);
    const int cin_hi = row.cin.value_or(1);
    for (const auto& [a, b] : operands) {
      for (int cin = cin_lo; cin <= cin_hi && result.passed; ++cin) {
        const std::uint64_t got = alu.evaluate(a, b, cin, row.s2, row.s1,
                                               row.s0).f;
        const std::uint64_t want = eval_alu_function(row.function, a, b,
                                                     alu.width);
        if (got != want) {
          result.passed = false;
          result.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " cin=" + std::to_string(cin) + ": f=" +
                          std::to_string(got) + ", reference=" +
                          std::to_string(want);
        }
      }
      if (!result.passed) break;
    }
    verification.rows.push_back(std::move(result));
  }
  return verification;
}

}  // namespace revnet
