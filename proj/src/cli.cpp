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

#include "revnet/cli.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "revnet/adders.hpp"
#include "revnet/alu.hpp"
#include "revnet/dsl.hpp"
#include "revnet/errors.hpp"
#include "revnet/faults.hpp"
#include "revnet/netlist.hpp"
#include "revnet/tables.hpp"

namespace revnet {
namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;   // a verification ran and failed
constexpr int kUsage = 2;  // bad invocation or unusable input

// Loads and parses a netlist from a path or '-' (stdin). Diagnostics go
// to err prefixed with the source name; warnings alone do not fail.
std::optional<Netlist> load_netlist(const std::string& path, std::istream& in,
                                    std::ostream& err) {
  std::string text;
  const std::string display = path == "-" ? "<stdin>" : path;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << path << "'\n";
      return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  ParseResult result = parse_netlist(text);
  for (const Diagnostic& diagnostic : result.diagnostics) {
    err << display << ":" << format_diagnostic(diagnostic) << "\n";
  }
  if (!result.ok()) return std::nullopt;
  return std::move(result.netlist);
}

int cmd_sim(const std::string& path, const std::string& bits,
            std::istream& in, std::ostream& out, std::ostream& err) {
  const std::optional<Netlist> net = load_netlist(path, in, err);
  if (!net) return kUsage;
  if (bits.size() != net->primary_count()) {
    err << "error: netlist has " << net->primary_count()
        << " primary inputs but --in supplies " << bits.size() << " bits\n";
    return kUsage;
  }
  BitVector inputs;
  try {
    inputs = BitVector::parse(bits);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << net->simulate(inputs).to_string() << "\n";
  return kOk;
}

int cmd_check(const std::string& path, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const std::optional<Netlist> net = load_netlist(path, in, err);
  if (!net) return kUsage;
  bool all_pass = true;

  if (net->line_count() <= kExhaustiveLineBound) {
    const bool bijective = verify_bijective(*net);
    out << "bijective: " << (bijective ? "yes" : "no") << "\n";
    all_pass = all_pass && bijective;
  } else {
    out << "bijective: skipped (line count exceeds the exhaustive bound)\n";
  }

  const ParityVerdict structural = verify_parity_structural(*net);
  if (structural.preserving) {
    out << "parity-preserving (structural): yes\n";
  } else {
    const std::size_t index = *structural.offending_gate;
    out << "parity-preserving (structural): no (gate " << index << " "
        << net->gates()[index].gate->name() << ")\n";
    all_pass = false;
  }

  if (net->primary_count() <= kExhaustivePrimaryBound) {
    const ParityVerdict sweep = verify_parity_exhaustive(*net);
    if (sweep.preserving) {
      out << "parity-preserving (exhaustive): yes\n";
    } else {
      out << "parity-preserving (exhaustive): no (input "
          << sweep.counterexample->to_string() << " changes total parity)\n";
      all_pass = false;
    }
  } else {
    out << "parity-preserving (exhaustive): skipped (input count exceeds "
           "the exhaustive bound)\n";
  }

  out << "result: " << (all_pass ? "pass" : "fail") << "\n";
  return all_pass ? kOk : kFail;
}

int cmd_cost(const std::string& path, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const std::optional<Netlist> net = load_netlist(path, in, err);
  if (!net) return kUsage;
  const CostReport report = cost_report(*net);
  const auto row = [&out](const char* label, std::uint64_t value) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-16s %llu\n", label,
                  static_cast<unsigned long long>(value));
    out << line;
  };
  row("lines", report.line_count);
  row("gates", report.gate_count);
  row("garbage outputs", report.garbage_outputs);
  row("constant inputs", report.constant_inputs);
  row("depth", report.depth);
  if (report.quantum_cost) {
    row("quantum cost", *report.quantum_cost);
  } else {
    out << "quantum cost     unspecified\n";
  }
  out << "\n";
  out << "lc=" << report.line_count << "\n";
  out << "gc=" << report.gate_count << "\n";
  out << "go=" << report.garbage_outputs << "\n";
  out << "ci=" << report.constant_inputs << "\n";
  out << "depth=" << report.depth << "\n";
  if (report.quantum_cost) out << "qc=" << *report.quantum_cost << "\n";
  return kOk;
}

void describe_site(const Netlist& net, const SiteResult& result,
                   std::ostream& out) {
  const FaultSite& site = result.site;
  if (site.gate_index == FaultSite::kInput) {
    out << "undetected: input flip on line "
        << net.lines()[site.position].name;
  } else {
    const GateInstance& inst = net.gates()[site.gate_index];
    out << "undetected: gate " << site.gate_index << " ("
        << inst.gate->name() << ") port " << site.position;
  }
  out << ", input " << result.first_undetected->to_string() << "\n";
}

int cmd_faults(const std::string& path, std::optional<std::uint64_t> samples,
               std::uint64_t seed, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const std::optional<Netlist> net = load_netlist(path, in, err);
  if (!net) return kUsage;
  FaultScanReport report;
  try {
    report = samples ? fault_scan_sampled(*net, *samples, seed)
                     : fault_scan_exhaustive(*net);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << " (re-run with --samples)\n";
    return kUsage;
  }
  out << "sites=" << report.sites.size() << "\n";
  out << "injections=" << report.total_injections << "\n";
  out << "detected=" << report.total_detected << "\n";
  char rate[32];
  std::snprintf(rate, sizeof(rate), "rate=%.6f\n", report.detection_rate());
  out << rate;
  if (report.all_detected()) {
    out << "PASS: every injected fault flips the output parity\n";
    return kOk;
  }
  std::size_t shown = 0;
  for (const SiteResult& result : report.sites) {
    if (result.all_detected()) continue;
    if (shown == 8) {
      out << "(further undetected sites omitted)\n";
      break;
    }
    describe_site(*net, result, out);
    ++shown;
  }
  out << "FAIL: " << report.total_injections - report.total_detected << " of "
      << report.total_injections << " injections go unnoticed\n";
  return kFail;
}

int cmd_alu_build(AluDesign design, std::size_t width, FtfaVariant variant,
                  const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const AluCircuit alu = build_alu(design, width, variant);
  const std::string text = print_netlist(alu.net);
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

int cmd_alu_verify(AluDesign design, std::size_t width, FtfaVariant variant,
                   std::ostream& out) {
  const AluCircuit alu = build_alu(design, width, variant);
  const TableVerification verification = verify_function_table(alu);
  std::size_t passed = 0;
  for (const RowVerification& row : verification.rows) {
    const FunctionTableRow& spec = row.row;
    out << "[" << (row.passed ? "PASS" : "FAIL") << "] s2=" << spec.s2
        << " s1=" << spec.s1 << " s0=" << spec.s0 << " cin="
        << (spec.cin ? std::to_string(*spec.cin) : std::string("-")) << "  "
        << alu_function_label(spec.function);
    if (!row.passed) out << "  (" << row.detail << ")";
    out << "\n";
    if (row.passed) ++passed;
  }
  out << passed << "/" << verification.rows.size() << " rows pass\n";
  return verification.all_passed() ? kOk : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Toolkit for parity-preserving reversible logic circuits.\n"
      "Bit strings on the command line and in printed vectors are most "
      "significant\nbit first; the last character of --in feeds the first "
      "declared input line."};
  app.name("revnet");
  app.require_subcommand(1);

  int exit_code = kOk;
  const std::vector<std::string> variant_tags = {"c1214", "c1212", "ig",
                                                 "pppg", "f2pg"};

  std::string sim_file;
  std::string sim_bits;
  CLI::App* sim = app.add_subcommand(
      "sim", "Simulate a netlist on one input vector");
  sim->add_option("file", sim_file, "netlist file, '-' for stdin")
      ->required();
  sim->add_option("--in", sim_bits,
                  "primary input bits, most significant bit first")
      ->required();
  sim->callback(
      [&] { exit_code = cmd_sim(sim_file, sim_bits, in, out, err); });

  std::string check_file;
  CLI::App* check = app.add_subcommand(
      "check", "Verify bijectivity and parity preservation");
  check->add_option("file", check_file, "netlist file, '-' for stdin")
      ->required();
  check->callback([&] { exit_code = cmd_check(check_file, in, out, err); });

  std::string cost_file;
  CLI::App* cost = app.add_subcommand(
      "cost", "Report gate, garbage, constant, depth and quantum costs");
  cost->add_option("file", cost_file, "netlist file, '-' for stdin")
      ->required();
  cost->callback([&] { exit_code = cmd_cost(cost_file, in, out, err); });

  CLI::App* faults = app.add_subcommand(
      "faults", "Fault-injection analysis");
  faults->require_subcommand(1);
  std::string scan_file;
  std::optional<std::uint64_t> scan_samples;
  std::uint64_t scan_seed = 1;
  CLI::App* scan = faults->add_subcommand(
      "scan", "Flip every line once per gate and count parity detections");
  scan->add_option("file", scan_file, "netlist file, '-' for stdin")
      ->required();
  scan->add_option("--samples", scan_samples,
                   "sample this many input vectors instead of sweeping all");
  scan->add_option("--seed", scan_seed, "seed for --samples (default 1)");
  scan->callback([&] {
    exit_code = cmd_faults(scan_file, scan_samples, scan_seed, in, out, err);
  });

  CLI::App* alu = app.add_subcommand(
      "alu", "Build or verify the bundled ALU designs");
  alu->require_subcommand(1);
  int alu_design = 1;
  std::size_t alu_width = 4;
  std::string alu_fa = "pppg";
  const auto add_alu_options = [&](CLI::App* cmd) {
    cmd->add_option("--design", alu_design,
                    "1 = arithmetic and logic units behind a multiplexer, "
                    "2 = one operand selector per adder slice")
        ->required()
        ->check(CLI::Range(1, 2));
    cmd->add_option("--width", alu_width, "operand width in bits")
        ->required()
        ->check(CLI::Range(1, 63));
    cmd->add_option("--fa", alu_fa, "full-adder variant")
        ->required()
        ->check(CLI::IsMember(variant_tags));
  };
  std::string alu_out;
  CLI::App* alu_build = alu->add_subcommand(
      "build", "Emit an ALU as netlist text");
  add_alu_options(alu_build);
  alu_build->add_option("-o,--out", alu_out,
                        "output file, '-' or absent for stdout");
  alu_build->callback([&] {
    exit_code = cmd_alu_build(alu_design == 1 ? AluDesign::kOne
                                              : AluDesign::kTwo,
                              alu_width, *parse_variant_tag(alu_fa), alu_out,
                              out, err);
  });
  CLI::App* alu_verify = alu->add_subcommand(
      "verify", "Check an ALU against the twelve-row function table");
  add_alu_options(alu_verify);
  alu_verify->callback([&] {
    exit_code = cmd_alu_verify(alu_design == 1 ? AluDesign::kOne
                                               : AluDesign::kTwo,
                               alu_width, *parse_variant_tag(alu_fa), out);
  });

  CLI::App* tables = app.add_subcommand(
      "tables", "Print cost tables for all bundled circuits next to their "
                "reference values");
  tables->callback([&] { out << render_cost_tables(cost_comparisons()); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}

}  // namespace revnet
