// Copyright 2026 The efgc Authors.
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

#include "efgc_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "efgc/arrangement.hpp"
#include "efgc/dispatch.hpp"
#include "efgc/errors.hpp"
#include "efgc/generators.hpp"
#include "efgc/io.hpp"
#include "efgc/oracle.hpp"
#include "efgc/verify.hpp"

namespace efgc::cli {
namespace {

constexpr int kExitError = 2;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_target(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

NumPartInput parse_values(const std::string& csv) {
  NumPartInput values;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error("values must be comma-separated non-negative integers, got '" + csv + "'");
    }
    values.push_back(std::stoull(item));
  }
  return values;
}

void print_warnings(const Verdict& v, std::ostream& err) {
  for (const auto& w : v.warnings) err << "warning: " << w << "\n";
}

// Prints the verdict line and, for Yes, the assignment (to `out_path` when
// given, otherwise after the verdict line).
int report_verdict(const Instance& inst, const Verdict& v, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  print_warnings(v, err);
  if (!v.yes) {
    out << "No\n";
    return 1;
  }
  const VerificationReport check = verify_assignment(inst, *v.assignment);
  if (!check.valid()) {
    err << "internal error: witness failed verification\n" << check.to_text();
    return kExitError;
  }
  out << "Yes\n";
  const std::string text = emit_assignment(*v.assignment, inst);
  if (out_path.empty()) {
    out << text;
  } else {
    write_target(out_path, text);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Envy-free division of graphs with divisible edges", "efgc"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path;
  std::string mode_text = "auto";
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a witness");
  solve_cmd->add_option("--in", in_path, "Instance file, '-' for stdin");
  solve_cmd->add_option("--mode", mode_text, "auto|few-edges|tree-vdgc|tree-gc|cycle|oracle");
  solve_cmd->add_option("--out", out_path, "Write the assignment here instead of stdout");

  std::string assignment_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check an assignment against an instance");
  verify_cmd->add_option("--in", in_path, "Instance file")->required();
  verify_cmd->add_option("--assignment", assignment_path, "Assignment file")->required();

  std::string family;
  std::string values_csv;
  std::string variant_text;
  auto* gen_cmd = app.add_subcommand("gen", "Emit an instance from a number-partitioning input");
  gen_cmd->add_option("family", family, "star|matching2|ladder")->required()->check(
      CLI::IsMember({"star", "matching2", "ladder"}));
  gen_cmd->add_option("--values", values_csv, "Comma-separated non-negative integers")->required();
  gen_cmd->add_option("--variant", variant_text, "gc|vdgc")->check(CLI::IsMember({"gc", "vdgc"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide an instance by explicit enumeration");
  oracle_cmd->add_option("--in", in_path, "Instance file, '-' for stdin");
  oracle_cmd->add_option("--out", out_path, "Write the assignment here instead of stdout");

  std::string forms_path;
  std::string region_path;
  std::string method_text = "auto";
  auto* cells_cmd = app.add_subcommand("cells", "List realizable sign vectors of linear forms");
  cells_cmd->add_option("--forms", forms_path, "efgc-linear file with 'form' lines")->required();
  cells_cmd->add_option("--region", region_path, "efgc-linear file with eq/ge lines")->required();
  cells_cmd->add_option("--method", method_text, "auto|bfs|sweep|incremental")
      ->check(CLI::IsMember({"auto", "bfs", "sweep", "incremental"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (solve_cmd->parsed()) {
      const auto mode = parse_mode(mode_text);
      if (!mode) {
        err << "usage error: unknown mode '" << mode_text << "'\n";
        return kExitError;
      }
      const Instance inst = parse_instance(read_source(in_path, in));
      return report_verdict(inst, solve(inst, *mode), out_path, out, err);
    }
    if (oracle_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(in_path, in));
      return report_verdict(inst, solve_explicit_oracle(inst), out_path, out, err);
    }
    if (verify_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(in_path, in));
      const Assignment a = parse_assignment(read_source(assignment_path, in), inst);
      const VerificationReport report = verify_assignment(inst, a);
      out << report.to_text();
      return report.valid() ? 0 : 1;
    }
    if (gen_cmd->parsed()) {
      const NumPartInput values = parse_values(values_csv);
      Instance inst;
      if (family == "star") {
        inst = gen_star_from_numpart(values);
      } else if (family == "matching2") {
        inst = gen_matching_plus_two(values);
      } else {
        inst = gen_ladder_tw2(values, variant_text == "gc" ? Variant::GC : Variant::VDGC);
      }
      if (!variant_text.empty()) inst.variant = variant_text == "gc" ? Variant::GC : Variant::VDGC;
      out << emit_instance(inst);
      return 0;
    }
    if (cells_cmd->parsed()) {
      const LinearFile forms = parse_linear(read_source(forms_path, in));
      const LinearFile region = parse_linear(read_source(region_path, in));
      std::vector<LinearForm> mapped;
      for (const auto& f : forms.forms) {
        LinearForm g(f.constant());
        for (const auto& [v, c] : f.coefficients()) {
          const auto id = region.system.find_variable(forms.variables[v]);
          if (!id) throw Error("form variable '" + forms.variables[v] + "' is not declared in the region");
          g.add_term(*id, c);
        }
        mapped.push_back(std::move(g));
      }
      const CellMethod method = method_text == "bfs"     ? CellMethod::Bfs
                                : method_text == "sweep" ? CellMethod::Sweep
                                : method_text == "incremental" ? CellMethod::Incremental
                                                               : CellMethod::Auto;
      const auto cells = enumerate_sign_conditions(mapped, region.system, method);
      out << "cells " << cells.size() << "\n";
      for (const auto& cell : cells) {
        for (std::size_t i = 0; i < cell.sign.size(); ++i) {
          out << (i ? " " : "") << (cell.sign[i] > 0 ? '+' : cell.sign[i] < 0 ? '-' : '0');
        }
        out << " |";
        for (std::size_t v = 0; v < cell.point.size(); ++v) {
          out << ' ' << region.variables[v] << '=' << to_string(cell.point[v]);
        }
        out << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace efgc::cli
