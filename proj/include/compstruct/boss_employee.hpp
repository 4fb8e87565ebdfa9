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

// Smallest boss/employee department layout that produces a given number of
// boss-employee interactions.

#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <vector>

#include "compstruct/core.hpp"

namespace compstruct {

// Objective value: total headcount first, bosses as tie-breaker.
struct StructureCost {
  Count total_employees = 0;
  Count bosses = 0;

  friend auto operator<=>(const StructureCost&, const StructureCost&) = default;
};

// Per-interaction-count optima for 0..TI, with the (bosses, employees)
// department chosen last at each count.
class InteractionTables {
 public:
  explicit InteractionTables(Count total_interactions)
      : te_(table_size(total_interactions), kUnset),
        bosses_(te_.size(), kUnset),
        choice_(te_.size()) {
    te_[0] = 0;
    bosses_[0] = 0;
    for (Count i = 1; i <= total_interactions; ++i) {
      // Iterating b then e ascending with strict improvement records the
      // lexicographically smallest (b, e) among equal-cost choices.
      for (Count b = 1; b <= i; ++b) {
        for (Count e = 1; e <= i / b; ++e) {
          const Count rest = i - b * e;
          const Count te = te_[rest] + b + e;
          const Count bosses = bosses_[rest] + b;
          if (te < te_[i] || (te == te_[i] && bosses < bosses_[i])) {
            te_[i] = te;
            bosses_[i] = bosses;
            choice_[i] = Department{b, e};
          }
        }
      }
    }
  }

  Count interactions() const { return te_.size() - 1; }
  Count total_employees(Count i) const { return te_.at(i); }
  Count bosses(Count i) const { return bosses_.at(i); }
  Department choice(Count i) const { return choice_.at(i); }

 private:
  // Must exceed any reachable value; kMaxTableCells bounds the inputs.
  static constexpr Count kUnset = std::numeric_limits<Count>::max() / 4;

  static std::size_t table_size(Count total_interactions) {
    if (total_interactions >= kMaxTableCells) throw InputError("interaction count too large");
    return total_interactions + 1;
  }

  std::vector<Count> te_;
  std::vector<Count> bosses_;
  std::vector<Department> choice_;
};

inline StructureCost min_structure(Count total_interactions) {
  const InteractionTables tables(total_interactions);
  return {tables.total_employees(total_interactions), tables.bosses(total_interactions)};
}

// An optimal composition, departments sorted by (bosses, employees).
inline DeptComposition solve_composition(Count total_interactions) {
  const InteractionTables tables(total_interactions);
  std::vector<Department> departments;
  for (Count i = total_interactions; i > 0;) {
    const Department d = tables.choice(i);
    departments.push_back(d);
    i -= d.bosses * d.employees;
  }
  std::sort(departments.begin(), departments.end());
  return DeptComposition(std::move(departments));
}

}  // namespace compstruct
