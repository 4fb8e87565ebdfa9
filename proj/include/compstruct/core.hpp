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

// Shared domain types for the company-structure solvers.
//
// Vertices and employees are labeled 1..n. Label 0 is reserved as the
// "no parent" sentinel of a Hierarchy. Every type validates its invariants
// on construction and is immutable afterwards.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compstruct {

using Count = std::uint64_t;
using Vertex = std::uint32_t;

inline constexpr Vertex kNoParent = 0;

// Upper bound on the cells any single dynamic-programming table may allocate.
inline constexpr Count kMaxTableCells = Count{1} << 26;

// Raised for malformed or out-of-contract inputs. Proven infeasibility is
// never reported through this exception; solvers return an empty optional.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Count checked_add(Count a, Count b) {
  if (a > std::numeric_limits<Count>::max() - b) {
    throw InputError("count overflow");
  }
  return a + b;
}

inline Count checked_mul(Count a, Count b) {
  if (a != 0 && b > std::numeric_limits<Count>::max() / a) {
    throw InputError("count overflow");
  }
  return a * b;
}

}  // namespace detail

// C(x, 2). Throws InputError when the result does not fit in Count.
inline Count choose2(Count x) {
  if (x < 2) return 0;
  // One of x, x-1 is even; divide it first so the product cannot overflow
  // unless the result itself does.
  return (x % 2 == 0) ? detail::checked_mul(x / 2, x - 1)
                      : detail::checked_mul(x, (x - 1) / 2);
}

// Number of same-department pairs: sum of C(size, 2).
inline Count pair_count(std::span<const Count> sizes) {
  Count total = 0;
  for (Count s : sizes) total = detail::checked_add(total, choose2(s));
  return total;
}

////////////////////////////////////////////////////////////////////////////////
// DepartmentPartition
////////////////////////////////////////////////////////////////////////////////

// Department sizes, stored in non-increasing order. Empty departments are
// allowed and sort last.
class DepartmentPartition {
 public:
  DepartmentPartition() = default;
  explicit DepartmentPartition(std::vector<Count> sizes) : sizes_(std::move(sizes)) {
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  }

  const std::vector<Count>& sizes() const { return sizes_; }
  std::size_t departments() const { return sizes_.size(); }

  Count employees() const {
    Count total = 0;
    for (Count s : sizes_) total = detail::checked_add(total, s);
    return total;
  }
  Count pairs() const { return pair_count(sizes_); }

  friend bool operator==(const DepartmentPartition&, const DepartmentPartition&) = default;

 private:
  std::vector<Count> sizes_;
};

////////////////////////////////////////////////////////////////////////////////
// DeptComposition
////////////////////////////////////////////////////////////////////////////////

struct Department {
  Count bosses = 0;
  Count employees = 0;

  friend auto operator<=>(const Department&, const Department&) = default;
};

// Departments with at least one boss and one simple employee each.
class DeptComposition {
 public:
  DeptComposition() = default;
  explicit DeptComposition(std::vector<Department> departments)
      : departments_(std::move(departments)) {
    for (const Department& d : departments_) {
      if (d.bosses == 0 || d.employees == 0) {
        throw InputError("every department needs at least one boss and one employee");
      }
    }
  }

  const std::vector<Department>& departments() const { return departments_; }

  // Sum of bosses * employees over departments.
  Count interactions() const {
    Count total = 0;
    for (const Department& d : departments_) {
      total = detail::checked_add(total, detail::checked_mul(d.bosses, d.employees));
    }
    return total;
  }

  Count total_employees() const {
    Count total = 0;
    for (const Department& d : departments_) {
      total = detail::checked_add(total, detail::checked_add(d.bosses, d.employees));
    }
    return total;
  }

  Count bosses() const {
    Count total = 0;
    for (const Department& d : departments_) total = detail::checked_add(total, d.bosses);
    return total;
  }

  friend bool operator==(const DeptComposition&, const DeptComposition&) = default;

 private:
  std::vector<Department> departments_;
};

////////////////////////////////////////////////////////////////////////////////
// CommunicationGraph
////////////////////////////////////////////////////////////////////////////////

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 1..n. Edges are normalized to u < v
// and kept sorted. Connectivity is not enforced here: operations that need
// a connected graph check it themselves and report InputError.
class CommunicationGraph {
 public:
  CommunicationGraph() = default;
  CommunicationGraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
      if (e.u == 0 || e.v == 0 || e.u > n_ || e.v > n_) {
        throw InputError("edge endpoint outside 1.." + std::to_string(n_));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw InputError("duplicate edge");
    }
  }

  Vertex vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // adjacency()[v] lists (neighbor, edge index) pairs; index 0 is unused.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacency() const {
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n_ + 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adj[edges_[i].u].emplace_back(edges_[i].v, i);
      adj[edges_[i].v].emplace_back(edges_[i].u, i);
    }
    return adj;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    auto adj = adjacency();
    std::vector<char> seen(n_ + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, _] : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n_;
  }

  friend bool operator==(const CommunicationGraph&, const CommunicationGraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
};

////////////////////////////////////////////////////////////////////////////////
// Ordering
////////////////////////////////////////////////////////////////////////////////

// A permutation of 1..n.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<Vertex> seq) : seq_(std::move(seq)) {
    std::vector<char> seen(seq_.size() + 1, 0);
    for (Vertex v : seq_) {
      if (v == 0 || v > seq_.size()) {
        throw InputError("label " + std::to_string(v) + " outside 1.." +
                         std::to_string(seq_.size()));
      }
      if (seen[v]) throw InputError("label " + std::to_string(v) + " repeated");
      seen[v] = 1;
    }
  }

  const std::vector<Vertex>& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  Vertex operator[](std::size_t i) const { return seq_[i]; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Vertex> seq_;
};

////////////////////////////////////////////////////////////////////////////////
// Hierarchy
////////////////////////////////////////////////////////////////////////////////

// Rooted tree on 1..n stored as a parent array. parents()[i] is the parent of
// vertex i + 1; the root's entry is kNoParent.
class Hierarchy {
 public:
  Hierarchy() = default;
  explicit Hierarchy(std::vector<Vertex> parents) : parents_(std::move(parents)) {
    const std::size_t n = parents_.size();
    if (n == 0) throw InputError("hierarchy must have at least one vertex");
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Vertex p = parents_[i];
      if (p > n) throw InputError("parent label outside 1.." + std::to_string(n));
      if (p == i + 1) throw InputError("vertex " + std::to_string(i + 1) + " is its own parent");
      if (p == kNoParent) {
        root_ = static_cast<Vertex>(i + 1);
        ++roots;
      }
    }
    if (roots != 1) throw InputError("hierarchy needs exactly one root");
    // Every vertex must reach the root. Colors: 0 unvisited, 1 on the
    // current walk, 2 known to reach the root.
    std::vector<char> color(n + 1, 0);
    color[root_] = 2;
    std::vector<Vertex> walk;
    for (Vertex start = 1; start <= n; ++start) {
      Vertex x = start;
      while (color[x] == 0) {
        color[x] = 1;
        walk.push_back(x);
        x = parents_[x - 1];
      }
      if (color[x] == 1) throw InputError("parent links contain a cycle");
      for (Vertex w : walk) color[w] = 2;
      walk.clear();
    }
  }

  // Skips validation; for callers that have already proven parents is a
  // tree rooted at root.
  static Hierarchy trusted(std::vector<Vertex> parents, Vertex root) {
    Hierarchy h;
    h.parents_ = std::move(parents);
    h.root_ = root;
    return h;
  }

  std::size_t size() const { return parents_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parents_.at(v - 1); }
  const std::vector<Vertex>& parents() const { return parents_; }

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;

 private:
  std::vector<Vertex> parents_;
  Vertex root_ = 0;
};

namespace detail {

// Children of every vertex in ascending label order, in CSR form:
// the children of v are child[offset[v] .. offset[v + 1]).
struct ChildLists {
  std::vector<Vertex> offset;
  std::vector<Vertex> child;

  explicit ChildLists(const Hierarchy& h) {
    const auto& parents = h.parents();
    const std::size_t n = parents.size();
    offset.assign(n + 2, 0);
    for (Vertex p : parents) ++offset[p + 1];
    for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
    child.resize(n);
    // Filling each list back to front while scanning v descending leaves it
    // sorted and moves offset[p + 1] to the start of list p.
    for (std::size_t v = n; v >= 1; --v) {
      child[--offset[parents[v - 1] + 1]] = static_cast<Vertex>(v);
    }
    std::copy(offset.begin() + 1, offset.end(), offset.begin());
    offset.back() = static_cast<Vertex>(n);
  }

  std::span<const Vertex> of(Vertex v) const {
    return {child.data() + offset[v], child.data() + offset[v + 1]};
  }
};

}  // namespace detail

// Preorder; children expanded in ascending label order.
inline Ordering traverse_df(const Hierarchy& h) {
  detail::ChildLists children(h);
  std::vector<Vertex> seq;
  seq.reserve(h.size());
  std::vector<Vertex> stack{h.root()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    seq.push_back(v);
    auto kids = children.of(v);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return Ordering(std::move(seq));
}

// Level order; children enqueued in ascending label order.
inline Ordering traverse_bf(const Hierarchy& h) {
  detail::ChildLists children(h);
  std::vector<Vertex> seq;
  seq.reserve(h.size());
  seq.push_back(h.root());
  for (std::size_t head = 0; head < seq.size(); ++head) {
    auto kids = children.of(seq[head]);
    seq.insert(seq.end(), kids.begin(), kids.end());
  }
  return Ordering(std::move(seq));
}

}  // namespace compstruct
