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

#include "revnet/dsl.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "revnet/adders.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate_catalog.hpp"
#include "revnet/netlist.hpp"

namespace revnet {
namespace {

bool has_error(const ParseResult& result, std::string_view needle) {
  for (const Diagnostic& d : result.diagnostics) {
    if (d.severity == Severity::kError &&
        d.message.find(needle) != std::string::npos) {
      return true;
    }
  }
  return false;
}

TEST_CASE("parses a small netlist with every line role") {
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "# copy of a onto a fresh zero line, parity preserved\n"
      "line a in out a\n"
      "line z0 const0 out c\n"
      "line z1 const1   # defaults to garbage\n"
      "gate F2G a z0 z1\n");
  REQUIRE(result.ok());
  REQUIRE(result.diagnostics.empty());
  const Netlist& net = *result.netlist;
  REQUIRE(net.line_count() == 3);
  CHECK(net.lines()[0].input == LineInput::kPrimary);
  CHECK(net.lines()[1].input == LineInput::kConstZero);
  CHECK(net.lines()[2].input == LineInput::kConstOne);
  CHECK(net.lines()[0].output.functional);
  CHECK(net.lines()[1].output.name == "c");
  CHECK_FALSE(net.lines()[2].output.functional);
  REQUIRE(net.gates().size() == 1);
  CHECK(net.gates()[0].gate->name() == "F2G");
  CHECK(net.gates()[0].lines == std::vector<std::size_t>{0, 1, 2});

  const BitVector out = net.simulate(BitVector::from_integer(1, 1));
  CHECK(out.bit(0) == 1);  // a
  CHECK(out.bit(1) == 1);  // copy on z0
}

TEST_CASE("explicit garbage clause and CRLF input are accepted") {
  const ParseResult result = parse_netlist(
      "revnet 1\r\n"
      "line a in garbage\r\n"
      "line b in out f\r\n"
      "gate FEYNMAN a b\r\n");
  REQUIRE(result.ok());
  CHECK_FALSE(result.netlist->lines()[0].output.functional);
  CHECK(result.netlist->functional_count() == 1);
}

TEST_CASE("header is mandatory and versioned") {
  CHECK(has_error(parse_netlist(""), "missing 'revnet 1' header"));
  CHECK(has_error(parse_netlist("# only comments\n\n"), "missing"));
  CHECK(has_error(parse_netlist("line a in\n"), "expected 'revnet 1'"));
  CHECK(has_error(parse_netlist("revnet 2\nline a in\n"),
                  "unsupported format version"));
  CHECK(has_error(parse_netlist("revnet\n"), "unsupported format version"));
  // Comments and blank lines may precede the header.
  CHECK(parse_netlist("# intro\n\nrevnet 1\nline a in out a\n").ok());
}

TEST_CASE("line statement errors carry their source line") {
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "line a in\n"
      "line a in\n"      // duplicate
      "line b middle\n"  // bad role
      "line\n"           // too short
      "line c in out\n"  // malformed clause
      "line d in out f extra\n");
  CHECK_FALSE(result.ok());
  CHECK_FALSE(result.netlist.has_value());
  REQUIRE(result.diagnostics.size() == 5);
  CHECK(result.diagnostics[0].line == 3);
  CHECK(result.diagnostics[0].message.find("duplicate") != std::string::npos);
  CHECK(result.diagnostics[1].line == 4);
  CHECK(result.diagnostics[1].message.find("unknown line role 'middle'") !=
        std::string::npos);
  CHECK(result.diagnostics[2].line == 5);
  CHECK(result.diagnostics[3].line == 6);
  CHECK(result.diagnostics[4].line == 7);
}

TEST_CASE("gate statement errors") {
  CHECK(has_error(parse_netlist("revnet 1\nline a in\ngate NOPE a\n"),
                  "unknown gate 'NOPE'"));
  CHECK(has_error(parse_netlist("revnet 1\nline a in\ngate FEYNMAN a b\n"),
                  "unknown line 'b'"));
  CHECK(has_error(parse_netlist("revnet 1\nline a in\ngate FEYNMAN a\n"),
                  "expects"));
  CHECK(has_error(parse_netlist("revnet 1\nline a in\ngate FEYNMAN a a\n"),
                  "bound"));
  CHECK(has_error(parse_netlist("revnet 1\nline a in\ngate\n"),
                  "gate statement needs a gate name"));
  CHECK(has_error(parse_netlist("revnet 1\nline a in\nfoo bar\n"),
                  "unknown statement 'foo'"));
}

TEST_CASE("defgate defines a usable custom gate") {
  // A 1-line inverter.
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "line a in out f\n"
      "defgate INV 1 1 0\n"
      "gate INV a\n");
  REQUIRE(result.ok());
  const Netlist& net = *result.netlist;
  CHECK(net.simulate(BitVector::from_integer(0, 1)).bit(0) == 1);
  CHECK(net.simulate(BitVector::from_integer(1, 1)).bit(0) == 0);
  CHECK_FALSE(net.gates()[0].gate->quantum_cost().has_value());
}

TEST_CASE("defgate validation") {
  CHECK(has_error(parse_netlist("revnet 1\ndefgate FREDKIN 1 1 0\n"),
                  "shadows a standard gate"));
  CHECK(has_error(
      parse_netlist("revnet 1\ndefgate X 1 1 0\ndefgate X 1 0 1\n"),
      "redefined"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 0\n"),
                  "arity must be at least 1"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 13 0\n"),
                  "exceeds the limit"));
  // Absurd arities are rejected before any table is sized.
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 4000000000 0\n"),
                  "exceeds the limit"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X two 0 1\n"),
                  "invalid arity 'two'"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 2 0 1 2\n"),
                  "needs 4 image entries, got 3"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 1 0 2\n"),
                  "image entry '2'"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate X 1 0 -1\n"),
                  "image entry '-1'"));
  CHECK(has_error(parse_netlist("revnet 1\ndefgate\n"),
                  "defgate needs a name and an arity"));
}

TEST_CASE("non-bijective defgate parses with a warning") {
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "line a in out f\n"
      "defgate SINK 1 0 0\n"
      "gate SINK a\n");
  REQUIRE(result.ok());
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].severity == Severity::kWarning);
  CHECK(result.diagnostics[0].line == 3);
  CHECK(result.diagnostics[0].message.find("not a bijection") !=
        std::string::npos);
  CHECK_FALSE(verify_bijective(*result.netlist));
}

TEST_CASE("parse recovers after an error and reports later problems") {
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "line a bad_role\n"
      "gate FEYNMAN a missing\n");
  CHECK_FALSE(result.ok());
  CHECK(result.diagnostics.size() == 2);
}

TEST_CASE("format_diagnostic renders severity and position") {
  CHECK(format_diagnostic({Severity::kError, 7, "boom"}) == "7: error: boom");
  CHECK(format_diagnostic({Severity::kWarning, 2, "meh"}) ==
        "2: warning: meh");
  CHECK(format_diagnostic({Severity::kError, 0, "empty input"}) ==
        "error: empty input");
}

TEST_CASE("printer emits canonical form") {
  const ParseResult result = parse_netlist(
      "revnet 1\n"
      "# comment is dropped\n"
      "line a in\n"
      "line b in out s\n"
      "gate FEYNMAN a b\n");
  REQUIRE(result.ok());
  CHECK(print_netlist(*result.netlist) ==
        "revnet 1\n"
        "line a in garbage\n"
        "line b in out s\n"
        "gate FEYNMAN a b\n");
}

TEST_CASE("print then parse reproduces built netlists") {
  for (FtfaVariant variant : kAllFtfaVariants) {
    CAPTURE(variant_tag(variant));
    const Netlist net = build_rca(2, variant);
    const std::string text = print_netlist(net);
    const ParseResult reparsed = parse_netlist(text);
    REQUIRE(reparsed.ok());
    CHECK(print_netlist(*reparsed.netlist) == text);
    CHECK(truth_table(*reparsed.netlist) == truth_table(net));
    CHECK(cost_report(*reparsed.netlist).quantum_cost ==
          cost_report(net).quantum_cost);
  }
}

TEST_CASE("printer emits defgate statements for non-standard gates") {
  // Inverting an adder yields NFT_INV etc. for the non-involutions.
  const Netlist net = build_ftfa(FtfaVariant::kIg).inverted();
  const std::string text = print_netlist(net);
  CHECK(text.find("defgate IG_INV 4") != std::string::npos);
  const ParseResult reparsed = parse_netlist(text);
  REQUIRE(reparsed.ok());
  CHECK(print_netlist(*reparsed.netlist) == text);
  CHECK(truth_table(*reparsed.netlist) == truth_table(net));
}

TEST_CASE("printer rejects gates that clash with standard names") {
  auto fake = std::make_shared<Gate>(
      "FEYNMAN", 2, std::vector<std::uint32_t>{0, 1, 2, 3}, std::nullopt);
  NetlistBuilder builder;
  const std::size_t a = builder.add_input("a");
  const std::size_t b = builder.add_input("b");
  builder.add_gate(fake, {a, b});
  const Netlist net = builder.build();
  CHECK_THROWS_AS((void)print_netlist(net), Error);
}

TEST_CASE("fuzz: random inputs never crash the parser") {
  std::mt19937 rng(2026);

  // Raw byte soup.
  std::uniform_int_distribution<int> len_dist(0, 160);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  for (int round = 0; round < 2000; ++round) {
    std::string text;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      text.push_back(static_cast<char>(byte_dist(rng)));
    }
    (void)parse_netlist(text);
  }

  // Token soup from the grammar vocabulary.
  const std::vector<std::string> vocab = {
      "revnet", "1",   "2",       "line", "gate",    "defgate", "in",
      "const0", "const1", "out",  "garbage", "a",    "b",       "z0",
      "FEYNMAN", "F2G", "FREDKIN", "X",    "0",      "3",       "13",
      "#", "\n", " "};
  std::uniform_int_distribution<std::size_t> word_dist(0, vocab.size() - 1);
  std::uniform_int_distribution<int> words_dist(0, 40);
  for (int round = 0; round < 2000; ++round) {
    std::string text = round % 2 == 0 ? "revnet 1\n" : "";
    const int words = words_dist(rng);
    for (int i = 0; i < words; ++i) {
      text += vocab[word_dist(rng)];
      text.push_back(' ');
    }
    const ParseResult result = parse_netlist(text);
    if (result.ok()) {
      // Whatever parses must round-trip through the printer.
      CHECK(print_netlist(*parse_netlist(print_netlist(*result.netlist))
                               .netlist) == print_netlist(*result.netlist));
    }
  }
}

}  // namespace
}  // namespace revnet
