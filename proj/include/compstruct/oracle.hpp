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

// Brute-force reference answers for small instances.
//
// Nothing here calls into the solver headers; only the value types from
// core.hpp are shared. Each routine enforces an enumeration budget and throws
// InputError beyond it.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compstruct/core.hpp"

namespace compstruct::oracle {

inline constexpr Count kMaxPartitionEmployees = 14;
inline constexpr Count kMaxInteractions = 60;
inline constexpr Vertex kMaxCriticalPairVertices = 10;
inline constexpr Vertex kMaxFeasibleSetVertices = 6;
inline constexpr std::size_t kMaxTreeVertices = 6;
inline constexpr std::size_t kMaxTraversalTableVertices = 7;

namespace internal {

inline void require_budget(bool within, const std::string& what) {
  if (!within) throw InputError(what + " exceeds the oracle's enumeration budget");
}

inline Count pairs_within(Count size) { return size * (size - 1) / 2; }

}  // namespace internal

// Minimum number of parts over every integer partition of n whose parts
// contribute exactly k same-part pairs.
inline std::optional<Count> min_departments(Count n, Count k) {
  internal::require_budget(n <= kMaxPartitionEmployees, "n = " + std::to_string(n));
  std::optional<Count> best;
  // Parts are generated in non-increasing order so each partition is seen once.
  std::function<void(Count, Count, Count, Count)> visit = [&](Count remaining, Count largest,
                                                              Count pairs, Count parts) {
    if (remaining == 0) {
      if (pairs == k && (!best || parts < *best)) best = parts;
      return;
    }
    for (Count part = std::min(remaining, largest); part >= 1; --part) {
      visit(remaining - part, part, pairs + internal::pairs_within(part), parts + 1);
    }
  };
  visit(n, n, 0, 0);
  return best;
}

struct Structure {
  Count total_employees = 0;
  Count bosses = 0;

  friend auto operator<=>(const Structure&, const Structure&) = default;
};

// Lexicographic minimum of (total employees, bosses) over every multiset of
// (bosses >= 1, employees >= 1) departments with sum of bosses * employees
// equal to total_interactions.
//
// The full space is about 1.8e9 multisets at 60 interactions, so branches
// are cut when even the most compact completion cannot beat the best seen.
// A department covering r interactions needs at least 2 * sqrt(r) people,
// and that bound is subadditive, so 2 * sqrt(remaining) is a valid floor.
inline Structure min_structure(Count total_interactions) {
  internal::require_budget(total_interactions <= kMaxInteractions,
                           "TI = " + std::to_string(total_interactions));
  // One boss with every interaction is always available.
  Structure best = total_interactions == 0 ? Structure{0, 0}
                                           : Structure{total_interactions + 1, 1};
  auto floor_people = [](Count remaining) {
    return static_cast<Count>(std::ceil(2.0 * std::sqrt(static_cast<double>(remaining)) - 1e-9));
  };
  // Departments are emitted in non-increasing (b, e) order.
  std::function<void(Count, Count, Count, Count, Count)> visit =
      [&](Count remaining, Count max_b, Count max_e, Count people, Count bosses) {
        if (remaining == 0) {
          best = std::min(best, Structure{people, bosses});
          return;
        }
        if (people + floor_people(remaining) > best.total_employees) return;
        for (Count b = std::min(max_b, remaining); b >= 1; --b) {
          Count e_cap = remaining / b;
          if (b == max_b) e_cap = std::min(e_cap, max_e);
          for (Count e = e_cap; e >= 1; --e) {
            visit(remaining - b * e, b, e, people + b + e, bosses + b);
          }
        }
      };
  visit(total_interactions, total_interactions, total_interactions, 0, 0);
  return best;
}

namespace internal {

// Component label of every vertex when the edge at index `skip` is ignored.
inline std::vector<Vertex> components_without(const CommunicationGraph& g, std::size_t skip) {
  const Vertex n = g.vertices();
  std::vector<Vertex> label(n + 1, 0);
  for (Vertex s = 1; s <= n; ++s) {
    if (label[s] != 0) continue;
    label[s] = s;
    bool grew = true;
    // Repeated edge sweeps; quadratic but obviously correct.
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i == skip) continue;
        const Edge e = g.edges()[i];
        if (label[e.u] == s && label[e.v] == 0) {
          label[e.v] = s;
          grew = true;
        } else if (label[e.v] == s && label[e.u] == 0) {
          label[e.u] = s;
          grew = true;
        }
      }
    }
  }
  return label;
}

}  // namespace internal

// Literal definition: delete each edge in turn and collect every pair that
// becomes disconnected.
inline Count critical_pairs(const CommunicationGraph& g) {
  const Vertex n = g.vertices();
  internal::require_budget(n <= kMaxCriticalPairVertices, "n = " + std::to_string(n));
  const std::size_t none = g.edges().size();
  const auto whole = internal::components_without(g, none);
  for (Vertex v = 1; v <= n; ++v) {
    if (whole[v] != whole[1]) throw InputError("communication graph is not connected");
  }
  std::set<std::pair<Vertex, Vertex>> critical;
  for (std::size_t skip = 0; skip < g.edges().size(); ++skip) {
    const auto label = internal::components_without(g, skip);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = i + 1; j <= n; ++j) {
        if (label[i] != label[j]) critical.emplace(i, j);
      }
    }
  }
  return critical.size();
}

// Every critical-pair count realized by some connected simple graph on n
// labeled vertices, found by trying all edge subsets.
inline std::set<Count> feasible_set(Vertex n) {
  internal::require_budget(n <= kMaxFeasibleSetVertices, "n = " + std::to_string(n));
  std::vector<Edge> all;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) all.push_back({u, v});
  }
  std::set<Count> counts;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    CommunicationGraph g(n, std::move(edges));
    const auto label = internal::components_without(g, g.edges().size());
    bool connected = true;
    for (Vertex v = 1; v <= n; ++v) connected = connected && label[v] == label[1];
    if (connected) counts.insert(critical_pairs(g));
  }
  return counts;
}

namespace internal {

// Parent assignments (index v - 1 holds the parent of v) that form a tree
// rooted at `root`, checked by walking up from every vertex.
inline bool is_tree_rooted_at(const std::vector<Vertex>& parents, Vertex root) {
  const std::size_t n = parents.size();
  for (Vertex v = 1; v <= n; ++v) {
    Vertex x = v;
    std::size_t steps = 0;
    while (x != root && steps <= n) {
      x = parents[x - 1];
      if (x == 0) return false;
      ++steps;
    }
    if (x != root) return false;
  }
  return parents[root - 1] == 0;
}

inline void preorder(const std::vector<Vertex>& parents, Vertex v, std::vector<Vertex>& out) {
  out.push_back(v);
  for (Vertex c = 1; c <= parents.size(); ++c) {
    if (parents[c - 1] == v) preorder(parents, c, out);
  }
}

inline std::vector<Vertex> level_order(const std::vector<Vertex>& parents, Vertex root) {
  std::vector<Vertex> out{root};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex c = 1; c <= parents.size(); ++c) {
      if (parents[c - 1] == out[head]) out.push_back(c);
    }
  }
  return out;
}

// Calls visit(parents) for every rooted labeled tree on 1..n with the given
// root: every non-root vertex tries every other vertex as its parent.
inline void for_each_tree_rooted_at(std::size_t n, Vertex root,
                                    const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> parents(n, 0);
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v > n) {
      if (is_tree_rooted_at(parents, root)) visit(parents);
      return;
    }
    if (v == root) {
      parents[v - 1] = 0;
      assign(v + 1);
      return;
    }
    for (Vertex p = 1; p <= n; ++p) {
      if (p == v) continue;
      parents[v - 1] = p;
      assign(v + 1);
    }
  };
  assign(1);
}

}  // namespace internal

// All hierarchies whose DF and BF orderings equal the given ones. Candidates
// are rooted at the first DF vertex, since every consistent tree is.
inline std::vector<Hierarchy> consistent_trees(const std::vector<Vertex>& df,
                                               const std::vector<Vertex>& bf) {
  const std::size_t n = df.size();
  internal::require_budget(n <= kMaxTreeVertices, "n = " + std::to_string(n));
  std::vector<Hierarchy> found;
  if (n == 0 || bf.size() != n) return found;
  internal::for_each_tree_rooted_at(n, df[0], [&](const std::vector<Vertex>& parents) {
    std::vector<Vertex> pre;
    internal::preorder(parents, df[0], pre);
    if (pre != df) return;
    if (internal::level_order(parents, df[0]) != bf) return;
    found.emplace_back(parents);
  });
  return found;
}

using OrderingPair = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

// (DF, BF) orderings of every rooted labeled tree on n vertices, with how
// many trees produce each pair.
inline std::map<OrderingPair, Count> traversal_table(std::size_t n) {
  internal::require_budget(n >= 1 && n <= kMaxTraversalTableVertices, "n = " + std::to_string(n));
  std::map<OrderingPair, Count> table;
  for (Vertex root = 1; root <= n; ++root) {
    internal::for_each_tree_rooted_at(n, root, [&](const std::vector<Vertex>& parents) {
      std::vector<Vertex> pre;
      internal::preorder(parents, root, pre);
      ++table[{std::move(pre), internal::level_order(parents, root)}];
    });
  }
  return table;
}

}  // namespace compstruct::oracle
