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

#include "revnet/tables.hpp"

#include <cstdio>
#include <functional>

#include "revnet/adders.hpp"
#include "revnet/alu.hpp"
#include "revnet/netlist.hpp"

namespace revnet {
namespace {

CostCells cells_of(const Netlist& net) {
  const CostReport report = cost_report(net);
  return {static_cast<int>(report.gate_count),
          static_cast<int>(report.garbage_outputs),
          static_cast<int>(report.constant_inputs)};
}

struct VariantReference {
  FtfaVariant variant;
  CostCells reference;
  bool hard;
};

CostTable variant_table(const std::string& title,
                        const std::vector<VariantReference>& references,
                        const std::function<Netlist(FtfaVariant)>& build) {
  CostTable table{title, {}};
  for (const VariantReference& entry : references) {
    table.rows.push_back({std::string(variant_tag(entry.variant)),
                          cells_of(build(entry.variant)), entry.reference,
                          entry.hard});
  }
  return table;
}

}  // namespace

std::vector<CostTable> cost_comparisons() {
  std::vector<CostTable> tables;

  tables.push_back(variant_table(
      "Full adder structures",
      {{FtfaVariant::kComposite1214, {8, 10, 9}, false},
       {FtfaVariant::kComposite1212, {6, 8, 8}, false},
       {FtfaVariant::kIg, {2, 3, 2}, true},
       {FtfaVariant::kPppg, {1, 3, 2}, true},
       {FtfaVariant::kF2pg, {1, 3, 2}, true}},
      [](FtfaVariant v) { return build_ftfa(v); }));

  tables.push_back(variant_table(
      "Arithmetic unit (one slice)",
      {{FtfaVariant::kComposite1214, {9, 12, 9}, false},
       {FtfaVariant::kComposite1212, {7, 10, 8}, false},
       {FtfaVariant::kIg, {3, 5, 2}, true},
       {FtfaVariant::kPppg, {2, 5, 2}, true},
       {FtfaVariant::kF2pg, {2, 5, 2}, true}},
      [](FtfaVariant v) { return build_arith_unit(1, v); }));

  tables.push_back(
      {"Logic unit (one slice)",
       {{"logic", cells_of(build_logic_unit(1)), {7, 10, 7}, false}}});

  tables.push_back(variant_table(
      "ALU design 1 (one slice)",
      {{FtfaVariant::kComposite1214, {17, 24, 16}, false},
       {FtfaVariant::kComposite1212, {15, 22, 15}, false},
       {FtfaVariant::kIg, {11, 17, 9}, true},
       {FtfaVariant::kPppg, {10, 17, 9}, true},
       {FtfaVariant::kF2pg, {10, 17, 9}, true}},
      [](FtfaVariant v) { return build_alu(AluDesign::kOne, 1, v).net; }));

  tables.push_back(
      {"Function selector",
       {{"fg", cells_of(build_function_selector()), {7, 12, 9}, false}}});

  tables.push_back(variant_table(
      "ALU design 2 (one slice)",
      {{FtfaVariant::kComposite1214, {16, 22, 18}, false},
       {FtfaVariant::kComposite1212, {14, 22, 17}, false},
       {FtfaVariant::kIg, {10, 17, 11}, false},
       {FtfaVariant::kPppg, {9, 17, 11}, false},
       {FtfaVariant::kF2pg, {9, 17, 11}, false}},
      [](FtfaVariant v) { return build_alu(AluDesign::kTwo, 1, v).net; }));

  return tables;
}

std::string render_cost_tables(const std::vector<CostTable>& tables) {
  std::string out;
  bool first = true;
  for (const CostTable& table : tables) {
    if (!first) out += "\n";
    first = false;
    out += table.title + "\n";
    out += "  structure  gates  garbage  consts  reference\n";
    for (const CostRow& row : table.rows) {
      char line[96];
      std::snprintf(line, sizeof(line), "  %-9s  %5d  %7d  %6d  (%d,%d,%d)%s\n",
                    row.label.c_str(), row.computed.gate_count,
                    row.computed.garbage_outputs, row.computed.constant_inputs,
                    row.reference.gate_count, row.reference.garbage_outputs,
                    row.reference.constant_inputs,
                    row.matches() ? "" : " *");
      out += line;
    }
  }
  out +=
      "\ngates = cascade length, garbage = non-functional outputs, consts = "
      "constant input lines\nrows marked '*' differ from the reference "
      "values\n";
  return out;
}

}  // namespace revnet
