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

// Cost summaries for the shipped circuit generators, paired with the
// reference values the designs are measured against. Every computed cell
// is produced by building the circuit and counting, never hardcoded, so
// the tables stay honest if a generator changes.

#ifndef REVNET_TABLES_HPP_
#define REVNET_TABLES_HPP_

#include <string>
#include <vector>

namespace revnet {

// The three classic cost metrics for a reversible circuit.
struct CostCells {
  int gate_count = 0;
  int garbage_outputs = 0;
  int constant_inputs = 0;

  friend bool operator==(const CostCells&, const CostCells&) = default;
};

struct CostRow {
  // Variant tag (c1214, c1212, ig, pppg, f2pg) or unit name.
  std::string label;
  CostCells computed;
  CostCells reference;
  // Hard rows are contractual: computed must equal reference exactly.
  // Soft rows track the reference but small divergences are reported,
  // not failed.
  bool hard = false;

  bool matches() const { return computed == reference; }
};

struct CostTable {
  std::string title;
  std::vector<CostRow> rows;
};

// Builds each circuit family at width 1 and tabulates its costs next to
// the reference values.
std::vector<CostTable> cost_comparisons();

// Plain-text rendering with aligned columns. Rows whose computed cells
// differ from the reference are marked with '*'. The output is stable and
// suitable for golden-file comparison.
std::string render_cost_tables(const std::vector<CostTable>& tables);

}  // namespace revnet

#endif  // REVNET_TABLES_HPP_
