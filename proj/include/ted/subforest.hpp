// A subforest is what remains of a tree after some number of leftmost-root
// and rightmost-root deletions. The handle stores deletion depths (a, b) with
// the remaining node set {v : pre(v) > a and post(v) <= n - b}, kept in the
// maximal canonical form: a is pinned to pre(leftmost root) - 1 and b to
// n - post(rightmost root), so equal node sets always compare equal and can
// key a memo table directly. The node count is cached because the two
// deletion prefixes may overlap on ancestors, which makes n - a - b wrong as
// a cardinality in general.
#pragma once

#include <cstdint>
#include <vector>

#include "ted/tree_index.hpp"

namespace ted {

class Subforest {
 public:
  Subforest() = default;

  static Subforest whole(const TreeIndex& ix);
  static Subforest none(const TreeIndex& ix);  // the empty subforest, canonically (n, 0)

  int left_deletions() const { return a_; }
  int right_deletions() const { return b_; }
  int node_count() const { return count_; }
  bool empty() const { return count_ == 0; }
  const TreeIndex& index() const { return *ix_; }

  // Roots of the leftmost and rightmost remaining trees. Both subtrees are
  // always complete: root deletions never reach below the remaining frontier.
  int leftmost_root() const;
  int rightmost_root() const;
  int left_tree_size() const;
  int right_tree_size() const;
  bool is_single_tree() const;

  bool contains(int v) const;
  std::vector<int> nodes() const;  // ascending preorder; intended for tests

  // Removal of one root. Throws std::invalid_argument on an empty subforest.
  Subforest delete_left() const;
  Subforest delete_right() const;

  // Removal of a whole end tree, used by the match branch of the recursion.
  Subforest drop_leftmost_tree() const;
  Subforest drop_rightmost_tree() const;

  // 64-bit identity of this subforest within its tree.
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(a_) << 32) | static_cast<std::uint32_t>(b_);
  }
  bool operator==(const Subforest& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  Subforest(const TreeIndex& ix, int a, int b, int count) : ix_(&ix), a_(a), b_(b), count_(count) {}

  const TreeIndex* ix_ = nullptr;
  int a_ = 0;
  int b_ = 0;
  int count_ = 0;

  friend Subforest subtree_subforest(const TreeIndex& ix, int v);
  friend Subforest rootless_subtree(const TreeIndex& ix, int v);
};

// The complete subtree of v as a subforest: (pre(v) - 1, n - post(v)).
Subforest subtree_subforest(const TreeIndex& ix, int v);
// That subtree with v itself removed, i.e. the forest of v's children.
Subforest rootless_subtree(const TreeIndex& ix, int v);

}  // namespace ted
