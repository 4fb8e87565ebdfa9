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

// Splitting n employees into departments so that exactly k pairs of
// employees share a department.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "compstruct/core.hpp"

namespace compstruct {

namespace detail {

inline void require_pairs_within_bound(Count n, Count k) {
  if (k > choose2(n)) {
    throw InputError(std::to_string(k) + " pairs exceed C(" + std::to_string(n) +
                     ", 2) = " + std::to_string(choose2(n)));
  }
}

inline void require_table_fits(Count n, Count k) {
  if (n >= kMaxTableCells || k >= kMaxTableCells || (n + 1) * (k + 1) > kMaxTableCells) {
    throw InputError("instance too large: table would need more than " +
                     std::to_string(kMaxTableCells) + " cells");
  }
}

}  // namespace detail

// Minimum department counts D(i, j) for 0 <= i <= n employees and
// 0 <= j <= k same-department pairs, with the first-department size that
// achieves each minimum.
class DMinTable {
 public:
  DMinTable(Count n, Count k) : n_(n), k_(k) {
    detail::require_table_fits(n, k);
    cells_.assign((n + 1) * (k + 1), kInfeasible);
    choice_.assign((n + 1) * (k + 1), 0);
    at(0, 0) = 0;
    for (Count i = 1; i <= n; ++i) {
      at(i, 0) = static_cast<std::uint32_t>(i);
      choice_[index(i, 0)] = 1;
      const Count reachable = std::min(k, choose2(i));
      for (Count j = 1; j <= reachable; ++j) {
        std::uint32_t best = kInfeasible;
        std::uint32_t best_p = 0;
        // Strict comparison keeps the smallest minimizing p.
        for (Count p = 1; p <= i; ++p) {
          const Count pairs = choose2(p);
          if (pairs > j) break;
          const std::uint32_t rest = at(i - p, j - pairs);
          if (rest != kInfeasible && rest + 1 < best) {
            best = rest + 1;
            best_p = static_cast<std::uint32_t>(p);
          }
        }
        at(i, j) = best;
        choice_[index(i, j)] = best_p;
      }
    }
  }

  Count employees() const { return n_; }
  Count pairs() const { return k_; }

  // Minimum number of departments, or nullopt when infeasible.
  std::optional<Count> cell(Count i, Count j) const {
    const std::uint32_t v = cells_.at(index(i, j));
    if (v == kInfeasible) return std::nullopt;
    return v;
  }

  // Size of the first department in an optimal split; 0 when infeasible.
  Count choice(Count i, Count j) const { return choice_.at(index(i, j)); }

 private:
  static constexpr std::uint32_t kInfeasible = std::numeric_limits<std::uint32_t>::max();

  std::size_t index(Count i, Count j) const { return i * (k_ + 1) + j; }
  std::uint32_t& at(Count i, Count j) { return cells_[index(i, j)]; }

  Count n_;
  Count k_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::uint32_t> choice_;
};

// Fewest departments n employees can form with exactly k same-department
// pairs; nullopt when no split produces k. Throws InputError if k > C(n, 2).
inline std::optional<Count> min_departments(Count n, Count k) {
  detail::require_pairs_within_bound(n, k);
  return DMinTable(n, k).cell(n, k);
}

// A split into exactly d departments (trailing ones empty) realizing k pairs,
// or nullopt if more than d departments are required.
inline std::optional<DepartmentPartition> solve_partition(Count n, Count k, Count d) {
  detail::require_pairs_within_bound(n, k);
  if (d > kMaxTableCells) throw InputError("department count too large");
  const DMinTable table(n, k);
  const auto needed = table.cell(n, k);
  if (!needed || *needed > d) return std::nullopt;

  std::vector<Count> sizes;
  sizes.reserve(d);
  for (Count i = n, j = k; i > 0;) {
    const Count p = table.choice(i, j);
    sizes.push_back(p);
    i -= p;
    j -= choose2(p);
  }
  sizes.resize(d, 0);
  return DepartmentPartition(std::move(sizes));
}

// Largest p with C(p, 2) <= k.
inline Count largest_clique_within(Count k) {
  Count p = static_cast<Count>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (p > 1 && choose2(p) > k) --p;
  while (choose2(p + 1) <= k) ++p;
  return p;
}

// The simple greedy heuristic: repeatedly carve off the largest department
// that does not exceed the remaining pairs, then count leftover employees as
// singleton departments. Not optimal in general (12 employees, 18 pairs
// gives 5 where 3 suffice). Returns nullopt if a step needs more employees
// than remain.
inline std::optional<Count> greedy_departments(Count n, Count k) {
  detail::require_pairs_within_bound(n, k);
  Count departments = 0;
  while (k > 0) {
    const Count p = largest_clique_within(k);
    if (p > n) return std::nullopt;
    k -= choose2(p);
    n -= p;
    ++departments;
  }
  return departments + n;
}

}  // namespace compstruct
