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

#include "revnet/adders.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "emit.hpp"
#include "revnet/errors.hpp"

namespace revnet {

std::string_view variant_tag(FtfaVariant variant) {
  switch (variant) {
    case FtfaVariant::kComposite1214:
      return "c1214";
    case FtfaVariant::kComposite1212:
      return "c1212";
    case FtfaVariant::kIg:
      return "ig";
    case FtfaVariant::kPppg:
      return "pppg";
    case FtfaVariant::kF2pg:
      return "f2pg";
  }
  throw Error("unknown full adder variant");
}

std::optional<FtfaVariant> parse_variant_tag(std::string_view tag) {
  for (FtfaVariant variant : kAllFtfaVariants) {
    if (variant_tag(variant) == tag) return variant;
  }
  return std::nullopt;
}

namespace internal {
namespace {

// Parity-preserving and-into-target: target ^= p1 & p2, using one fresh
// zero ancilla (two gates). p2 is restored afterwards.
void emit_ppt2(NetlistBuilder& b, std::size_t p1, std::size_t p2,
               std::size_t target, const std::string& tag) {
  const std::size_t z = b.add_const("z" + tag, 0);
  b.add_gate("FREDKIN", {p1, p2, z});
  b.add_gate("F2G", {z, target, p2});
}

// Same contract with three ancillae and three gates; both operands are
// restored and every intermediate stays explicitly parity-balanced.
void emit_ppt3(NetlistBuilder& b, std::size_t p1, std::size_t p2,
               std::size_t target, const std::string& tag) {
  const std::size_t za = b.add_const("za" + tag, 0);
  const std::size_t zb = b.add_const("zb" + tag, 0);
  const std::size_t zc = b.add_const("zc" + tag, 0);
  b.add_gate("F2G", {p2, za, zb});
  b.add_gate("FREDKIN", {p1, za, zc});
  b.add_gate("F2G", {zc, target, zb});
}

}  // namespace

FtfaLines emit_ftfa(NetlistBuilder& b, FtfaVariant variant, std::size_t a,
                    std::size_t bb, std::size_t c, const std::string& tag) {
  switch (variant) {
    case FtfaVariant::kPppg: {
      const std::size_t z0 = b.add_const("z0" + tag, 0);
      const std::size_t z1 = b.add_const("z1" + tag, 0);
      b.add_gate("PPPG", {a, bb, c, z0, z1});
      return {c, z0};
    }
    case FtfaVariant::kF2pg: {
      const std::size_t z0 = b.add_const("z0" + tag, 0);
      const std::size_t z1 = b.add_const("z1" + tag, 0);
      b.add_gate("F2PG", {a, bb, c, z0, z1});
      return {c, z0};
    }
    case FtfaVariant::kIg: {
      const std::size_t z0 = b.add_const("z0" + tag, 0);
      const std::size_t z1 = b.add_const("z1" + tag, 0);
      b.add_gate("IG", {a, bb, z0, z1});
      b.add_gate("IG", {bb, c, z0, z1});
      return {c, z0};
    }
    case FtfaVariant::kComposite1214:
    case FtfaVariant::kComposite1212: {
      const bool three = variant == FtfaVariant::kComposite1214;
      // carry = (a & b) ^ ((a ^ b) & c); sum = (a ^ b) ^ c.
      const std::size_t z0 = b.add_const("z0" + tag, 0);
      three ? emit_ppt3(b, a, bb, z0, "p" + tag)
            : emit_ppt2(b, a, bb, z0, "p" + tag);
      const std::size_t lz = b.add_const("lz" + tag, 0);
      b.add_gate("F2G", {a, bb, lz});  // b now carries a ^ b
      three ? emit_ppt3(b, bb, c, z0, "q" + tag)
            : emit_ppt2(b, bb, c, z0, "q" + tag);
      const std::size_t lz2 = b.add_const("lz2" + tag, 0);
      b.add_gate("F2G", {bb, c, lz2});  // c now carries the sum
      return {c, z0};
    }
  }
  throw Error("unknown full adder variant");
}

std::vector<std::size_t> emit_fanout(NetlistBuilder& b, std::size_t src,
                                     std::size_t count,
                                     const std::string& tag) {
  std::vector<std::size_t> carriers = {src};
  std::size_t k = 0;
  while (carriers.size() < count) {
    const std::size_t c1 = b.add_const(tag + "c" + std::to_string(k), 0);
    const std::size_t c2 = b.add_const(tag + "c" + std::to_string(k + 1), 0);
    b.add_gate("F2G", {src, c1, c2});
    carriers.push_back(c1);
    carriers.push_back(c2);
    k += 2;
  }
  carriers.resize(count);
  return carriers;
}

}  // namespace internal

Netlist build_ftfa(FtfaVariant variant) {
  NetlistBuilder b;
  const std::size_t a = b.add_input("a");
  const std::size_t bb = b.add_input("b");
  const std::size_t c = b.add_input("cin");
  const internal::FtfaLines lines = internal::emit_ftfa(b, variant, a, bb, c, "");
  b.set_output(lines.sum, "sum");
  b.set_output(lines.cout, "cout");
  return b.build();
}

namespace {

// Stage i of the ripple chain: a/b renamed with the bit position, every
// ancilla suffixed with it, and the sum output renamed to f{i}. The cin
// line and the cout output keep their names; both are consumed when the
// stage is composed onto the carry chain.
Netlist rca_stage(FtfaVariant variant, std::size_t i) {
  const Netlist cell = build_ftfa(variant);
  const std::string suffix = std::to_string(i);
  std::unordered_map<std::string, std::string> line_names = {
      {"a", "a" + suffix}, {"b", "b" + suffix}};
  for (const Line& line : cell.lines()) {
    if (line.input != LineInput::kPrimary) {
      line_names.emplace(line.name, line.name + "_" + suffix);
    }
  }
  return renamed(cell, line_names, {{"sum", "f" + suffix}});
}

}  // namespace

Netlist build_rca(std::size_t width, FtfaVariant variant) {
  if (width == 0) throw Error("adder width must be at least 1");
  Netlist net = rca_stage(variant, 0);
  for (std::size_t i = 1; i < width; ++i) {
    const Netlist stage = rca_stage(variant, i);
    net = compose(net, stage,
                  {{output_ordinal(net, "cout"), input_ordinal(stage, "cin")}});
  }
  // Canonical line order: a0..a{n-1}, b0..b{n-1}, cin, then the internal
  // lines in creation order (which keeps f0..f{n-1}, cout as the output
  // order).
  std::vector<std::size_t> order;
  order.reserve(net.line_count());
  for (std::size_t i = 0; i < width; ++i) {
    order.push_back(*net.find_line("a" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < width; ++i) {
    order.push_back(*net.find_line("b" + std::to_string(i)));
  }
  order.push_back(*net.find_line("cin"));
  std::vector<bool> placed(net.line_count(), false);
  for (std::size_t idx : order) placed[idx] = true;
  for (std::size_t idx = 0; idx < net.line_count(); ++idx) {
    if (!placed[idx]) order.push_back(idx);
  }
  return net.reordered(order);
}

}  // namespace revnet
