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

#include "compstruct/oracle.hpp"

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace compstruct::oracle {
namespace {

TEST(OracleMinDepartmentsTest, Examples) {
  EXPECT_EQ(min_departments(12, 18), Count{3});
  EXPECT_EQ(min_departments(0, 0), Count{0});
  EXPECT_EQ(min_departments(3, 2), std::nullopt);
  EXPECT_EQ(min_departments(5, 0), Count{5});
}

TEST(OracleMinDepartmentsTest, Budget) {
  EXPECT_NO_THROW(min_departments(14, 0));
  EXPECT_THROW(min_departments(15, 0), InputError);
}

TEST(OracleMinStructureTest, Examples) {
  EXPECT_EQ(min_structure(0), (Structure{0, 0}));
  EXPECT_EQ(min_structure(1), (Structure{2, 1}));
  EXPECT_EQ(min_structure(4), (Structure{4, 2}));
  EXPECT_EQ(min_structure(12), (Structure{7, 3}));
  EXPECT_EQ(min_structure(7), (Structure{7, 3}));
  EXPECT_THROW(min_structure(61), InputError);
}

TEST(OracleCriticalPairsTest, Examples) {
  EXPECT_EQ(critical_pairs(CommunicationGraph(2, {{1, 2}})), 1u);
  EXPECT_EQ(critical_pairs(CommunicationGraph(3, {{1, 2}, {2, 3}, {1, 3}})), 0u);
  EXPECT_EQ(critical_pairs(CommunicationGraph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}})), 3u);
  EXPECT_THROW(critical_pairs(CommunicationGraph(3, {{1, 2}})), InputError);
  EXPECT_THROW(critical_pairs(CommunicationGraph(11, {})), InputError);
}

TEST(OracleFeasibleSetTest, SmallSizes) {
  // Frozen from a separate brute force over every edge subset.
  EXPECT_EQ(feasible_set(0), (std::set<Count>{0}));
  EXPECT_EQ(feasible_set(1), (std::set<Count>{0}));
  EXPECT_EQ(feasible_set(2), (std::set<Count>{1}));
  EXPECT_EQ(feasible_set(3), (std::set<Count>{0, 3}));
  EXPECT_EQ(feasible_set(4), (std::set<Count>{0, 3, 6}));
  EXPECT_EQ(feasible_set(5), (std::set<Count>{0, 4, 7, 10}));
  EXPECT_EQ(feasible_set(6), (std::set<Count>{0, 5, 9, 12, 15}));
  EXPECT_THROW(feasible_set(7), InputError);
}

TEST(OracleConsistentTreesTest, Examples) {
  const auto single = consistent_trees({1}, {1});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].parents(), (std::vector<Vertex>{0}));

  const auto both = consistent_trees({1, 2, 3}, {1, 2, 3});
  ASSERT_EQ(both.size(), 2u);
  std::set<std::vector<Vertex>> shapes{both[0].parents(), both[1].parents()};
  EXPECT_EQ(shapes, (std::set<std::vector<Vertex>>{{0, 1, 1}, {0, 1, 2}}));

  EXPECT_TRUE(consistent_trees({1, 2, 3}, {1, 3, 2}).empty());

  const auto unique = consistent_trees({1, 2, 4, 3}, {1, 2, 3, 4});
  ASSERT_EQ(unique.size(), 1u);
  EXPECT_EQ(unique[0].parents(), (std::vector<Vertex>{0, 1, 1, 2}));
  EXPECT_THROW(consistent_trees({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}), InputError);
}

TEST(OracleTraversalTableTest, CountsEveryRootedTree) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Count total = 0;
    for (const auto& [orderings, trees] : traversal_table(n)) total += trees;
    Count cayley = 1;
    for (std::size_t i = 1; i < n; ++i) cayley *= n;
    EXPECT_EQ(total, cayley) << n;
  }
}

}  // namespace
}  // namespace compstruct::oracle
