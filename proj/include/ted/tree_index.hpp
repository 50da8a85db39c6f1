// Traversal numbering and decomposition structure for one tree: preorder and
// postorder ranks, subtree sizes, heavy-child links, keyroots, and the light
// nodes that drive the recursive decomposition.
#pragma once

#include <vector>

#include "ted/tree.hpp"

namespace ted {

class TreeIndex {
 public:
  int n() const { return n_; }
  const Tree& tree() const { return *tree_; }

  // Ranks are 1-based; arrays are indexed by node id.
  int pre(int v) const { return pre_[v]; }
  int post(int v) const { return post_[v]; }
  int size(int v) const { return size_[v]; }
  int parent(int v) const { return tree_->parent(v); }
  int node_at_pre(int rank) const { return node_at_pre_[rank - 1]; }
  int node_at_post(int rank) const { return node_at_post_[rank - 1]; }

  // Heavy child: the largest child, leftmost on ties; -1 for leaves.
  // A node is light when it has a parent and is not that parent's heavy child.
  int heavy_child(int v) const { return heavy_child_[v]; }
  bool is_light(int v) const { return light_[v] != 0; }

  // Light ancestors of v, counting v itself when v is light.
  int ldepth(int v) const { return ldepth_[v]; }
  // Keyroot ancestors of v, counting v itself when v is a keyroot.
  int cdepth(int v) const { return cdepth_[v]; }

  bool is_keyroot(int v) const { return keyroot_[v] != 0; }
  const std::vector<int>& keyroots() const { return keyroots_; }

  // Light nodes whose only light ancestor is themselves: the subtree roots
  // left over after removing the heavy path that starts at the tree root.
  const std::vector<int>& toplight_root() const { return toplight_root_; }
  // Same decomposition for the heavy path starting at v.
  std::vector<int> toplight_of(int v) const;

  friend TreeIndex build_index(const Tree& t);

 private:
  const Tree* tree_ = nullptr;
  int n_ = 0;
  std::vector<int> pre_, post_, size_, node_at_pre_, node_at_post_;
  std::vector<int> heavy_child_, ldepth_, cdepth_;
  std::vector<char> light_, keyroot_;
  std::vector<int> keyroots_, toplight_root_;
};

// The tree must outlive the index; temporaries are rejected outright.
TreeIndex build_index(const Tree& t);
TreeIndex build_index(Tree&& t) = delete;

}  // namespace ted
