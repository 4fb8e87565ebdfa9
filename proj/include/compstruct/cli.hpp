// Copyright 2026 The compstruct Authors
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

// Command-line front end. Exit codes: 0 solved, 1 input or usage error,
// 2 proven infeasible or inconsistent.

#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "compstruct/report.hpp"
#include "compstruct/verify.hpp"

namespace compstruct::cli {

inline constexpr int kSolved = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInfeasible = 2;

namespace internal {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

inline std::string join(const std::vector<Count>& values) {
  std::string s;
  for (Count v : values) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

inline std::string show_or(const Json& value, const char* fallback) {
  return value.is_null() ? fallback : value.dump();
}

}  // namespace internal

// Parses argv and runs one subcommand, writing reports to out and
// diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infer company structures from counts and traversal orderings", "compstruct"};
  app.require_subcommand(1);

  bool plain = false;
  app.add_flag("--plain", plain, "Human-readable output instead of JSON");
  app.add_flag("--json", [&plain](std::int64_t) { plain = false; }, "JSON output (default)");

  Count employees = 0;
  Count pairs = 0;
  std::optional<Count> departments;
  auto* dept = app.add_subcommand("departments", "Fewest departments giving k shared pairs");
  dept->add_option("--employees,-n", employees, "Number of employees")->required();
  dept->add_option("--pairs,-k", pairs, "Pairs working in the same department")->required();
  dept->add_option("--departments,-d", departments, "Department count to fill (default: minimum)");

  Count total = 0;
  auto* inter = app.add_subcommand("interactions", "Smallest boss/employee layout for TI");
  inter->add_option("--total,-t", total, "Total boss-employee interactions")->required();

  std::string dot_path;
  auto* crit = app.add_subcommand("critical-pairs", "Communication graph with k critical pairs");
  crit->add_option("--employees,-n", employees, "Number of employees")->required();
  crit->add_option("--pairs,-k", pairs, "Number of critical pairs")->required();
  crit->add_option("--dot", dot_path, "Write the witness graph as DOT");

  std::string df_path;
  std::string bf_path;
  auto* hier = app.add_subcommand("hierarchy", "Hierarchy from DF and BF orderings");
  hier->add_option("--df", df_path, "File holding the depth-first ordering")->required();
  hier->add_option("--bf", bf_path, "File holding the breadth-first ordering")->required();
  hier->add_option("--dot", dot_path, "Write the hierarchy as DOT");

  std::string problem;
  Count max_n = 0;
  Count max_ti = 0;
  auto* verify = app.add_subcommand("verify", "Sweep a solver against its brute-force oracle");
  verify->add_option("problem", problem, "Problem to sweep")
      ->required()
      ->check(CLI::IsMember({"departments", "interactions", "critical-pairs", "hierarchy"}));
  verify->add_option("--max-n", max_n, "Largest instance size (n)");
  verify->add_option("--max-ti", max_ti, "Largest interaction count (interactions only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSolved;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (dept->parsed()) {
      const auto minimum = min_departments(employees, pairs);
      const Count d = departments.value_or(minimum.value_or(0));
      auto partition = minimum ? solve_partition(employees, pairs, d) : std::nullopt;
      const auto greedy = greedy_departments(employees, pairs);
      const Json report = departments_report(minimum, partition, greedy);
      if (plain) {
        out << "feasible: " << (partition ? "yes" : "no") << "\n"
            << "min_departments: " << internal::show_or(report["min_departments"], "infeasible")
            << "\n";
        if (partition) out << "sizes: " << internal::join(partition->sizes()) << "\n";
        out << "greedy_departments: "
            << internal::show_or(report["greedy_departments"], "failed") << "\n";
      } else {
        out << report.dump() << "\n";
      }
      return partition ? kSolved : kInfeasible;
    }

    if (inter->parsed()) {
      const DeptComposition composition = solve_composition(total);
      if (plain) {
        out << "total_employees: " << composition.total_employees() << "\n"
            << "bosses: " << composition.bosses() << "\n";
        for (const Department& d : composition.departments()) {
          out << "department: " << d.bosses << " bosses, " << d.employees << " employees\n";
        }
      } else {
        out << interactions_report(composition).dump() << "\n";
      }
      return kSolved;
    }

    if (crit->parsed()) {
      const auto graph = build_graph(employees, pairs);
      if (graph && !dot_path.empty()) internal::write_file(dot_path, to_dot(*graph));
      if (plain) {
        out << "feasible: " << (graph ? "yes" : "no") << "\n";
        if (graph) {
          for (const Edge& e : graph->edges()) out << "edge: " << e.u << " " << e.v << "\n";
          out << "critical_pairs_check: " << count_critical_pairs(*graph) << "\n";
        }
      } else {
        out << critical_pairs_report(graph).dump() << "\n";
      }
      return graph ? kSolved : kInfeasible;
    }

    if (hier->parsed()) {
      const TraversalPair orderings(parse_ordering(internal::read_file(df_path)),
                                    parse_ordering(internal::read_file(bf_path)));
      const auto h = reconstruct(orderings);
      if (h && !dot_path.empty()) internal::write_file(dot_path, to_dot(*h));
      if (plain) {
        out << "consistent: " << (h ? "yes" : "no") << "\n";
        if (h) {
          for (Vertex v = 1; v <= h->size(); ++v) {
            out << "parent " << v << ": " << h->parent(v) << "\n";
          }
        }
      } else {
        out << hierarchy_report(h).dump() << "\n";
      }
      return h ? kSolved : kInfeasible;
    }

    if (verify->parsed()) {
      SweepResult sweep;
      if (problem == "departments") {
        sweep = sweep_departments(verify->count("--max-n") ? max_n : 10);
      } else if (problem == "interactions") {
        sweep = sweep_interactions(verify->count("--max-ti") ? max_ti : oracle::kMaxInteractions);
      } else if (problem == "critical-pairs") {
        sweep = sweep_critical_pairs(
            static_cast<Vertex>(verify->count("--max-n") ? max_n : oracle::kMaxFeasibleSetVertices));
      } else {
        sweep = sweep_hierarchy(verify->count("--max-n") ? max_n : oracle::kMaxTreeVertices);
      }
      if (plain) {
        out << problem << ": " << sweep.instances << " instances, " << sweep.mismatches.size()
            << " mismatches\n";
        for (const auto& m : sweep.mismatches) out << "mismatch " << m << "\n";
      } else {
        Json report;
        report["problem"] = problem;
        report["instances"] = sweep.instances;
        report["mismatches"] = sweep.mismatches;
        out << report.dump() << "\n";
      }
      return sweep.ok() ? kSolved : kInputError;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace compstruct::cli
