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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "compstruct/boss_employee.hpp"
#include "compstruct/critpair_graph.hpp"
#include "compstruct/dept_partition.hpp"
#include "compstruct/oracle.hpp"
#include "compstruct/tree_reconstruct.hpp"

namespace cs = compstruct;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Uniform random recursive tree on 1..n with shuffled labels.
cs::Hierarchy random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<cs::Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), cs::Vertex{1});
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<cs::Vertex> parents(n, cs::kNoParent);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    parents[labels[i] - 1] = labels[pick(rng)];
  }
  return cs::Hierarchy(std::move(parents));
}

bool round_trips(const cs::Hierarchy& h) {
  const cs::TraversalPair t(cs::traverse_df(h), cs::traverse_bf(h));
  const auto rebuilt = cs::reconstruct(t);
  return rebuilt && cs::validate(t, *rebuilt);
}

Outcome department_dp_vs_oracle() {
  Outcome out;
  for (cs::Count n = 0; n <= 12; ++n) {
    for (cs::Count k = 0; k <= cs::choose2(n); ++k) {
      if (cs::min_departments(n, k) != cs::oracle::min_departments(n, k)) {
        out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return out;
}

Outcome greedy_counterexample() {
  Outcome out;
  const auto greedy = cs::greedy_departments(12, 18);
  const auto best = cs::min_departments(12, 18);
  if (greedy != cs::Count{5} || best != cs::Count{3}) {
    out.fail("greedy=" + (greedy ? std::to_string(*greedy) : std::string("none")) +
             " min=" + (best ? std::to_string(*best) : std::string("none")));
  }
  return out;
}

Outcome interaction_dp_vs_oracle() {
  Outcome out;
  for (cs::Count ti = 0; ti <= 60; ++ti) {
    const auto solved = cs::min_structure(ti);
    const auto expected = cs::oracle::min_structure(ti);
    if (solved.total_employees != expected.total_employees || solved.bosses != expected.bosses) {
      out.fail("TI=" + std::to_string(ti) + " optimum differs");
    }
    const auto witness = cs::solve_composition(ti);
    if (witness.interactions() != ti || witness.total_employees() != solved.total_employees ||
        witness.bosses() != solved.bosses) {
      out.fail("TI=" + std::to_string(ti) + " witness does not re-evaluate");
    }
  }
  return out;
}

Outcome feasibility_vs_oracle() {
  Outcome out;
  for (cs::Vertex n = 0; n <= 6; ++n) {
    const auto achievable = cs::oracle::feasible_set(n);
    for (cs::Count k = 0; k <= cs::choose2(n); ++k) {
      if (cs::feasible(n, k) != achievable.contains(k)) {
        out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const cs::OkTable table(20, 0);
  if (table.ok(2, 0)) out.fail("OK(2,0) is true");
  for (cs::Count i = 3; i <= 20; ++i) {
    if (!table.ok(i, 0)) out.fail("OK(" + std::to_string(i) + ",0) is false");
  }
  return out;
}

Outcome witness_graphs() {
  Outcome out;
  for (cs::Vertex n = 0; n <= 6; ++n) {
    for (cs::Count k = 0; k <= cs::choose2(n); ++k) {
      if (!cs::feasible(n, k)) continue;
      const auto g = cs::build_graph(n, k);
      if (!g || cs::count_critical_pairs(*g) != k) {
        out.fail("witness n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const cs::Vertex n = std::uniform_int_distribution<cs::Vertex>(1, 10)(rng);
    std::vector<cs::Edge> edges;
    for (cs::Vertex v = 2; v <= n; ++v) {
      edges.push_back({std::uniform_int_distribution<cs::Vertex>(1, v - 1)(rng), v});
    }
    std::bernoulli_distribution extra(0.2);
    for (cs::Vertex u = 1; u <= n; ++u) {
      for (cs::Vertex v = u + 1; v <= n; ++v) {
        const bool present = std::find(edges.begin(), edges.end(), cs::Edge{u, v}) != edges.end();
        if (!present && extra(rng)) edges.push_back({u, v});
      }
    }
    const cs::CommunicationGraph g(n, std::move(edges));
    if (cs::count_critical_pairs(g) != cs::oracle::critical_pairs(g)) {
      out.fail("random graph " + std::to_string(trial));
    }
  }
  return out;
}

Outcome tree_round_trip() {
  Outcome out;
  for (std::size_t n = 1; n <= 7; ++n) {
    cs::Count trees = 0;
    for (cs::Vertex root = 1; root <= n; ++root) {
      cs::oracle::internal::for_each_tree_rooted_at(
          n, root, [&](const std::vector<cs::Vertex>& parents) {
            ++trees;
            if (!round_trips(cs::Hierarchy(parents))) out.fail("exhaustive n=" + std::to_string(n));
          });
    }
    cs::Count cayley = 1;
    for (std::size_t i = 1; i < n; ++i) cayley *= n;
    if (trees != cayley) out.fail("enumerated " + std::to_string(trees) + " trees at n=" +
                                  std::to_string(n));
  }
  std::mt19937_64 rng(7);
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      if (!round_trips(random_tree(n, rng))) out.fail("random n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome inconsistency_vs_oracle() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<cs::Vertex> df(n);
    std::iota(df.begin(), df.end(), cs::Vertex{1});
    do {
      std::vector<cs::Vertex> bf = df;
      std::sort(bf.begin() + 1, bf.end());
      do {
        const auto h = cs::reconstruct(cs::TraversalPair(cs::Ordering(df), cs::Ordering(bf)));
        const bool none = cs::oracle::consistent_trees(df, bf).empty();
        if (h.has_value() == none) out.fail("n=" + std::to_string(n) + " pair disagrees");
      } while (std::next_permutation(bf.begin() + 1, bf.end()));
    } while (std::next_permutation(df.begin(), df.end()));
  }
  return out;
}

double median_reconstruct_seconds(std::size_t n, int runs, std::mt19937_64& rng) {
  std::vector<double> times;
  for (int r = 0; r < runs; ++r) {
    const cs::Hierarchy h = random_tree(n, rng);
    const cs::TraversalPair t(cs::traverse_df(h), cs::traverse_bf(h));
    const auto start = Clock::now();
    const auto rebuilt = cs::reconstruct(t);
    times.push_back(seconds_since(start));
    if (!rebuilt) return -1.0;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

Outcome reconstruct_linearity() {
  Outcome out;
  std::mt19937_64 rng(11);
  const double small = median_reconstruct_seconds(100000, 9, rng);
  const double large = median_reconstruct_seconds(1000000, 9, rng);
  char buf[96];
  std::snprintf(buf, sizeof buf, "median 1e5: %.4fs, 1e6: %.4fs, ratio %.2f", small, large,
                large / small);
  out.detail = buf;
  if (small <= 0.0 || large <= 0.0 || large / small > 15.0) out.fail(buf);
  return out;
}

Outcome complexity_smoke() {
  Outcome out;
  auto start = Clock::now();
  (void)cs::min_departments(100, 2000);
  const double dept = seconds_since(start);
  start = Clock::now();
  (void)cs::min_structure(2000);
  const double inter = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof buf, "min_departments(100,2000): %.3fs, min_structure(2000): %.3fs",
                dept, inter);
  out.detail = buf;
  if (dept > 10.0 || inter > 10.0) out.fail(buf);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"department DP matches oracle for n <= 12", department_dp_vs_oracle},
      {"greedy(12,18) = 5 > min(12,18) = 3", greedy_counterexample},
      {"interaction DP matches oracle for TI <= 60", interaction_dp_vs_oracle},
      {"critical-pair feasibility matches oracle for n <= 6", feasibility_vs_oracle},
      {"witness graphs and bridge counts match oracle", witness_graphs},
      {"tree round-trip, exhaustive n <= 7 and random up to 1e5", tree_round_trip},
      {"inconsistency detection matches oracle for n <= 5", inconsistency_vs_oracle},
      {"reconstruction time ratio 1e6 / 1e5 <= 15", reconstruct_linearity},
      {"DP smoke tests finish within 10 s", complexity_smoke},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %zu. %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(start), o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed;
}
