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

// Communication graphs with a prescribed number of critical pairs.
//
// A pair of vertices is critical when deleting a single edge disconnects
// them. Only bridges can do that, so the critical pairs of a connected graph
// are exactly the pairs lying in different 2-edge-connected components.
// Any arrangement of those components can be rearranged into a path with the
// same count, which is what OkTable searches over.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compstruct/core.hpp"

namespace compstruct {

// 2-edge-connected component sizes in path order. A component has one vertex
// or at least three; two vertices cannot be 2-edge-connected in a simple
// graph.
class ComponentPath {
 public:
  ComponentPath() = default;
  explicit ComponentPath(std::vector<Count> sizes) : sizes_(std::move(sizes)) {
    for (Count p : sizes_) {
      if (p == 0 || p == 2) throw InputError("component sizes must be 1 or at least 3");
    }
  }

  const std::vector<Count>& sizes() const { return sizes_; }

  Count vertices() const {
    Count total = 0;
    for (Count p : sizes_) total = detail::checked_add(total, p);
    return total;
  }

  // Sum over component pairs t < u of size_t * size_u.
  Count critical_pairs() const {
    Count before = 0;
    Count total = 0;
    for (Count p : sizes_) {
      total = detail::checked_add(total, detail::checked_mul(before, p));
      before += p;
    }
    return total;
  }

  friend bool operator==(const ComponentPath&, const ComponentPath&) = default;

 private:
  std::vector<Count> sizes_;
};

// ok(i, j): some connected simple graph on i vertices has exactly j critical
// pairs. choice(i, j) is the first path component's size (smallest that
// works), or i itself for the bridgeless j = 0 cells.
class OkTable {
 public:
  OkTable(Count n, Count k) : n_(n), k_(k) {
    if (n >= kMaxTableCells || k >= kMaxTableCells || (n + 1) * (k + 1) > kMaxTableCells) {
      throw InputError("instance too large: table would need more than " +
                       std::to_string(kMaxTableCells) + " cells");
    }
    choice_.assign((n + 1) * (k + 1), kFalse);
    for (Count i = 0; i <= n; ++i) {
      if (i != 2) choice_[index(i, 0)] = static_cast<std::uint32_t>(i);
      const Count reachable = std::min(k, choose2(i));
      for (Count j = 1; j <= reachable; ++j) {
        for (Count p = 1; p <= i; ++p) {
          if (p == 2) continue;
          const Count across = p * (i - p);
          if (across > j) continue;
          if (ok(i - p, j - across)) {
            choice_[index(i, j)] = static_cast<std::uint32_t>(p);
            break;
          }
        }
      }
    }
  }

  Count vertices() const { return n_; }
  Count pairs() const { return k_; }

  bool ok(Count i, Count j) const { return choice_.at(index(i, j)) != kFalse; }
  Count choice(Count i, Count j) const { return choice_.at(index(i, j)); }

 private:
  static constexpr std::uint32_t kFalse = std::numeric_limits<std::uint32_t>::max();

  std::size_t index(Count i, Count j) const { return i * (k_ + 1) + j; }

  Count n_;
  Count k_;
  std::vector<std::uint32_t> choice_;
};

inline bool feasible(Count n, Count k) {
  if (k > choose2(n)) return false;
  return OkTable(n, k).ok(n, k);
}

// Component sizes recovered from the table, or nullopt when infeasible.
inline std::optional<ComponentPath> component_path(Count n, Count k) {
  if (k > choose2(n)) return std::nullopt;
  const OkTable table(n, k);
  if (!table.ok(n, k)) return std::nullopt;
  std::vector<Count> sizes;
  Count i = n;
  Count j = k;
  while (j > 0) {
    const Count p = table.choice(i, j);
    sizes.push_back(p);
    j -= p * (i - p);
    i -= p;
  }
  if (i > 0) sizes.push_back(i);
  return ComponentPath(std::move(sizes));
}

// Lays out a component path: consecutive label blocks from 1, each block of
// three or more vertices closed into a cycle, and a bridge between the
// lowest labels of neighbouring blocks.
inline CommunicationGraph realize(const ComponentPath& path) {
  const Count n = path.vertices();
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("too many vertices");
  std::vector<Edge> edges;
  Vertex first = 1;
  Vertex previous_first = 0;
  for (Count p : path.sizes()) {
    const auto size = static_cast<Vertex>(p);
    if (previous_first != 0) edges.push_back({previous_first, first});
    if (size >= 3) {
      for (Vertex v = first; v + 1 < first + size; ++v) edges.push_back({v, v + 1});
      edges.push_back({first, first + size - 1});
    }
    previous_first = first;
    first += size;
  }
  return CommunicationGraph(static_cast<Vertex>(n), std::move(edges));
}

// A connected graph on n vertices with exactly k critical pairs, or nullopt
// when none exists.
inline std::optional<CommunicationGraph> build_graph(Count n, Count k) {
  auto path = component_path(n, k);
  if (!path) return std::nullopt;
  return realize(*path);
}

// Bridges of g via one iterative lowpoint DFS per connected component.
inline std::vector<Edge> find_bridges(const CommunicationGraph& g) {
  const Vertex n = g.vertices();
  const auto adj = g.adjacency();
  std::vector<Vertex> discovery(n + 1, 0);
  std::vector<Vertex> low(n + 1, 0);
  std::vector<Edge> bridges;

  struct Frame {
    Vertex v;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

  Vertex timer = 0;
  std::vector<Frame> stack;
  for (Vertex start = 1; start <= n; ++start) {
    if (discovery[start] != 0) continue;
    discovery[start] = low[start] = ++timer;
    stack.push_back({start, kNoEdge});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < adj[top.v].size()) {
        auto [w, edge] = adj[top.v][top.next++];
        if (edge == top.parent_edge) continue;
        if (discovery[w] != 0) {
          low[top.v] = std::min(low[top.v], discovery[w]);
        } else {
          discovery[w] = low[w] = ++timer;
          stack.push_back({w, edge});
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > discovery[parent]) bridges.push_back(g.edges()[done.parent_edge]);
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

// Sizes of the 2-edge-connected components of g (the pieces left after
// deleting every bridge), in order of their smallest vertex.
inline std::vector<Count> two_edge_component_sizes(const CommunicationGraph& g) {
  const Vertex n = g.vertices();
  const auto bridges = find_bridges(g);
  std::vector<char> is_bridge(g.edges().size(), 0);
  for (std::size_t i = 0, b = 0; i < g.edges().size() && b < bridges.size(); ++i) {
    if (g.edges()[i] == bridges[b]) {
      is_bridge[i] = 1;
      ++b;
    }
  }
  const auto adj = g.adjacency();
  std::vector<char> seen(n + 1, 0);
  std::vector<Count> sizes;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.push_back(s);
    Count size = 0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (auto [y, edge] : adj[x]) {
        if (!is_bridge[edge] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

// Critical pairs of a connected graph: C(n, 2) minus the pairs sharing a
// 2-edge-connected component. Throws InputError for disconnected graphs.
inline Count count_critical_pairs(const CommunicationGraph& g) {
  if (!g.is_connected()) throw InputError("communication graph is not connected");
  Count same_component = 0;
  for (Count c : two_edge_component_sizes(g)) same_component += choose2(c);
  return choose2(g.vertices()) - same_component;
}

}  // namespace compstruct
