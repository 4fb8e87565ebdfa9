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

// Solver-versus-oracle sweeps over every instance within a size budget.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "compstruct/boss_employee.hpp"
#include "compstruct/critpair_graph.hpp"
#include "compstruct/dept_partition.hpp"
#include "compstruct/oracle.hpp"
#include "compstruct/tree_reconstruct.hpp"

namespace compstruct {

struct SweepResult {
  Count instances = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline std::string show(const std::optional<Count>& v) {
  return v ? std::to_string(*v) : std::string("infeasible");
}

inline std::string show(const std::vector<Vertex>& seq) {
  std::string s;
  for (Vertex v : seq) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "[" + s + "]";
}

}  // namespace detail

inline SweepResult sweep_departments(Count max_n) {
  if (max_n > oracle::kMaxPartitionEmployees) {
    throw InputError("max n for departments is " + std::to_string(oracle::kMaxPartitionEmployees));
  }
  SweepResult result;
  for (Count n = 0; n <= max_n; ++n) {
    for (Count k = 0; k <= choose2(n); ++k) {
      ++result.instances;
      const auto solved = min_departments(n, k);
      const auto expected = oracle::min_departments(n, k);
      const std::string where = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
      if (solved != expected) {
        result.mismatches.push_back(where + ": solver " + detail::show(solved) + ", oracle " +
                                    detail::show(expected));
        continue;
      }
      if (!solved) continue;
      const auto partition = solve_partition(n, k, *solved);
      if (!partition || partition->employees() != n || partition->pairs() != k ||
          partition->departments() != *solved) {
        result.mismatches.push_back(where + ": witness does not realize the instance");
      }
    }
  }
  return result;
}

inline SweepResult sweep_interactions(Count max_ti) {
  if (max_ti > oracle::kMaxInteractions) {
    throw InputError("max TI for interactions is " + std::to_string(oracle::kMaxInteractions));
  }
  SweepResult result;
  for (Count ti = 0; ti <= max_ti; ++ti) {
    ++result.instances;
    const StructureCost solved = min_structure(ti);
    const oracle::Structure expected = oracle::min_structure(ti);
    const std::string where = "(TI=" + std::to_string(ti) + ")";
    if (solved.total_employees != expected.total_employees || solved.bosses != expected.bosses) {
      result.mismatches.push_back(
          where + ": solver (" + std::to_string(solved.total_employees) + ", " +
          std::to_string(solved.bosses) + "), oracle (" +
          std::to_string(expected.total_employees) + ", " + std::to_string(expected.bosses) + ")");
      continue;
    }
    const DeptComposition witness = solve_composition(ti);
    if (witness.interactions() != ti || witness.total_employees() != solved.total_employees ||
        witness.bosses() != solved.bosses) {
      result.mismatches.push_back(where + ": witness does not realize the optimum");
    }
  }
  return result;
}

inline SweepResult sweep_critical_pairs(Vertex max_n) {
  if (max_n > oracle::kMaxFeasibleSetVertices) {
    throw InputError("max n for critical-pairs is " +
                     std::to_string(oracle::kMaxFeasibleSetVertices));
  }
  SweepResult result;
  for (Vertex n = 0; n <= max_n; ++n) {
    const auto achievable = oracle::feasible_set(n);
    for (Count k = 0; k <= choose2(n); ++k) {
      ++result.instances;
      const std::string where = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
      const bool expected = achievable.contains(k);
      if (feasible(n, k) != expected) {
        result.mismatches.push_back(where + ": solver says " +
                                    (expected ? "infeasible" : "feasible") + ", oracle disagrees");
        continue;
      }
      if (!expected) continue;
      const auto g = build_graph(n, k);
      if (!g || !g->is_connected() || count_critical_pairs(*g) != k ||
          oracle::critical_pairs(*g) != k) {
        result.mismatches.push_back(where + ": witness graph has the wrong critical-pair count");
      }
    }
  }
  return result;
}

// Every (DF, BF) pair of permutations of 1..n sharing a first vertex, for
// n up to max_n, checked against the table of all trees' traversals.
inline SweepResult sweep_hierarchy(std::size_t max_n) {
  if (max_n > oracle::kMaxTraversalTableVertices) {
    throw InputError("max n for hierarchy is " +
                     std::to_string(oracle::kMaxTraversalTableVertices));
  }
  SweepResult result;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto table = oracle::traversal_table(n);
    std::vector<Vertex> df(n);
    std::iota(df.begin(), df.end(), Vertex{1});
    do {
      std::vector<Vertex> bf = df;
      std::sort(bf.begin() + 1, bf.end());
      do {
        ++result.instances;
        const bool expected = table.contains({df, bf});
        const auto h = reconstruct(TraversalPair(Ordering(df), Ordering(bf)));
        if (h.has_value() != expected) {
          result.mismatches.push_back("df=" + detail::show(df) + " bf=" + detail::show(bf) +
                                      ": solver " + (h ? "consistent" : "inconsistent") +
                                      ", oracle disagrees");
        }
      } while (std::next_permutation(bf.begin() + 1, bf.end()));
    } while (std::next_permutation(df.begin(), df.end()));
  }
  return result;
}

}  // namespace compstruct
