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

// Rebuilding a hierarchy from its depth-first and breadth-first orderings
// (children visited in ascending label order in both).
//
// The reconstruction walks the DF ordering keeping the current root path.
// Each new vertex x hangs off some vertex on that path; its depth decides
// which. Same-depth vertices appear in the same relative order in both
// traversals, so x's BF predecessor u is either the previous vertex on x's
// level or, if x opens a new level, the last vertex of the level above.
// When u is already placed that pins x's depth, except when u is also x's
// DF predecessor on the deepest level so far: then x may be its sibling or
// its first child. Taking the sibling never loses a solution, since in any
// tree where x is the first child of u, u is the last vertex of its level
// and lifting all of u's children to be u's later siblings leaves both
// orderings unchanged.
//
// The candidate is then checked against both orderings, so any ordering pair
// with no consistent tree is reported as inconsistent.

#pragma once

#include <optional>
#include <vector>

#include "compstruct/core.hpp"

namespace compstruct {

// DF and BF orderings of the same vertex set, starting at the same root.
class TraversalPair {
 public:
  TraversalPair(Ordering df, Ordering bf) : df_(std::move(df)), bf_(std::move(bf)) {
    if (df_.size() != bf_.size()) throw InputError("orderings have different lengths");
    if (df_.empty()) throw InputError("orderings are empty");
    if (df_[0] != bf_[0]) throw InputError("orderings start at different roots");
  }

  const Ordering& df() const { return df_; }
  const Ordering& bf() const { return bf_; }
  std::size_t size() const { return df_.size(); }

 private:
  Ordering df_;
  Ordering bf_;
};

// 1-based positions of each vertex in both orderings. Position n + 1 holds
// the sentinel vertex 0, so df_at(n + 1) == bf_at(n + 1) == 0.
class PositionIndex {
 public:
  explicit PositionIndex(const TraversalPair& t)
      : n_(t.size()), df_(&t.df()), bf_(&t.bf()), pos_(n_ + 1) {
    const auto sentinel = static_cast<Vertex>(n_ + 1);
    pos_[0] = {sentinel, sentinel};
    for (std::size_t i = 0; i < n_; ++i) {
      pos_[t.df()[i]].df = static_cast<Vertex>(i + 1);
      pos_[t.bf()[i]].bf = static_cast<Vertex>(i + 1);
    }
  }

  std::size_t posdf(Vertex v) const { return pos_[v].df; }
  std::size_t posbf(Vertex v) const { return pos_[v].bf; }
  Vertex df_at(std::size_t pos) const { return pos > n_ ? 0 : (*df_)[pos - 1]; }
  Vertex bf_at(std::size_t pos) const { return pos > n_ ? 0 : (*bf_)[pos - 1]; }

 private:
  // Both positions of a vertex share a cache line.
  struct Positions {
    Vertex df = 0;
    Vertex bf = 0;
  };

  std::size_t n_;
  const Ordering* df_;
  const Ordering* bf_;
  std::vector<Positions> pos_;
};

namespace detail {

// Both checks take, for each position i > 0 of an ordering, the position of
// that vertex's parent in the same ordering.
//
// A sequence is the preorder iff every parent is on the ancestor stack of the
// previous vertex, with siblings in ascending label order. Each parent then
// precedes its child, so a match also proves the parent links form a tree.
inline bool preorder_matches(const Ordering& df, const std::vector<Vertex>& parent_pos) {
  std::vector<Vertex> stack{0};
  for (std::size_t i = 1; i < df.size(); ++i) {
    // The last position popped off the parent is the previous sibling.
    std::size_t sibling = 0;
    while (!stack.empty() && stack.back() != parent_pos[i]) {
      sibling = stack.back();
      stack.pop_back();
    }
    if (stack.empty() || (sibling != 0 && df[i] < df[sibling])) return false;
    stack.push_back(static_cast<Vertex>(i));
  }
  return true;
}

// A sequence is the level order iff the key (parent position, label)
// increases along it and every parent comes earlier.
inline bool level_order_matches(const Ordering& bf, const std::vector<Vertex>& parent_pos) {
  for (std::size_t i = 2; i < bf.size(); ++i) {
    const Vertex at = parent_pos[i];
    if (at >= i || at < parent_pos[i - 1]) return false;
    if (at == parent_pos[i - 1] && bf[i] < bf[i - 1]) return false;
  }
  return bf.size() < 2 || parent_pos[1] == 0;
}

}  // namespace detail

// True iff h's DF and BF orderings are exactly t's.
inline bool validate(const TraversalPair& t, const Hierarchy& h) {
  const std::size_t n = t.size();
  if (h.size() != n || t.df()[0] != h.root()) return false;
  const PositionIndex pos(t);
  std::vector<Vertex> df_parent(n, 0);
  std::vector<Vertex> bf_parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    df_parent[i] = static_cast<Vertex>(pos.posdf(h.parent(t.df()[i])) - 1);
    bf_parent[i] = static_cast<Vertex>(pos.posbf(h.parent(t.bf()[i])) - 1);
  }
  return detail::preorder_matches(t.df(), df_parent) &&
         detail::level_order_matches(t.bf(), bf_parent);
}

// A hierarchy whose traversals reproduce t, or nullopt if none exists.
inline std::optional<Hierarchy> reconstruct(const TraversalPair& t) {
  const std::size_t n = t.size();
  const auto& df = t.df();
  const auto& bf = t.bf();
  constexpr Vertex kUnplaced = static_cast<Vertex>(-1);

  // Per-label state kept together so each vertex touches one cache line.
  struct Slot {
    Vertex posbf = 0;  // 0-based position in bf
    Vertex depth = kUnplaced;
    Vertex parent = kNoParent;
  };
  std::vector<Slot> slot(n + 1);
  for (std::size_t i = 0; i < n; ++i) slot[bf[i]].posbf = static_cast<Vertex>(i);

  // Ancestors of the current vertex, by depth, with both positions.
  struct Ancestor {
    Vertex label;
    Vertex posdf;
    Vertex posbf;
  };
  std::vector<Ancestor> path;
  std::vector<Vertex> last_on_level;  // most recent vertex placed at each depth
  // Parent positions in each ordering, indexed by the child's position; they
  // feed the final check.
  std::vector<Vertex> df_parent(n, 0);
  std::vector<Vertex> bf_parent(n, 0);

  const Vertex root = df[0];
  slot[root].depth = 0;
  path.push_back({root, 0, slot[root].posbf});
  last_on_level.push_back(root);

  Vertex prev = root;
  std::size_t prev_depth = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex x = df[i];
    Slot& sx = slot[x];
    if (sx.posbf == 0) return std::nullopt;  // only the root opens bf
    const Vertex bf_prev = bf[sx.posbf - 1];
    const Vertex bf_prev_depth = slot[bf_prev].depth;
    const std::size_t deepest = last_on_level.size() - 1;

    std::size_t d;
    if (bf_prev_depth == kUnplaced) {
      // x opens a new level; the rest of the level above is still to come.
      if (prev_depth != deepest) return std::nullopt;
      d = prev_depth + 1;
    } else if (bf_prev == prev && prev_depth == deepest) {
      d = (prev_depth >= 1 && x > prev) ? prev_depth : prev_depth + 1;
    } else {
      d = bf_prev_depth;
      if (d == 0 || d > prev_depth + 1 || last_on_level[d] != bf_prev) return std::nullopt;
      if (d <= prev_depth && x < path[d].label) return std::nullopt;
    }

    path.resize(d);
    const Ancestor& up = path[d - 1];
    sx.parent = up.label;
    sx.depth = static_cast<Vertex>(d);
    df_parent[i] = up.posdf;
    bf_parent[sx.posbf] = up.posbf;
    path.push_back({x, static_cast<Vertex>(i), sx.posbf});
    if (d == last_on_level.size()) {
      last_on_level.push_back(x);
    } else {
      last_on_level[d] = x;
    }
    prev = x;
    prev_depth = d;
  }

  if (!detail::preorder_matches(df, df_parent) || !detail::level_order_matches(bf, bf_parent)) {
    return std::nullopt;
  }
  std::vector<Vertex> parents(n);
  for (std::size_t v = 1; v <= n; ++v) parents[v - 1] = slot[v].parent;
  return Hierarchy::trusted(std::move(parents), root);
}

}  // namespace compstruct
