// Ordered labeled trees with value semantics. Nodes are integer ids into a
// flat node array; children keep left-to-right order. All traversals are
// iterative so chains of 1e5 nodes cannot overflow the call stack.
#pragma once

#include <string>
#include <vector>

namespace ted {

// One node of a tree under assembly. Children are ids into the same array.
struct TreeNode {
  std::string label;
  std::vector<int> children;
};

class Tree {
 public:
  Tree() = default;  // the empty tree

  // Validates shape: exactly one root, every non-root referenced exactly once,
  // all nodes reachable, labels non-empty. Throws std::invalid_argument.
  Tree(std::vector<TreeNode> nodes, int root);

  bool empty() const { return nodes_.empty(); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }

  const std::string& label(int v) const { return nodes_[v].label; }
  const std::vector<int>& children(int v) const { return nodes_[v].children; }
  int parent(int v) const { return parent_[v]; }           // -1 for the root
  int child_index(int v) const { return child_index_[v]; }  // 0 for the root

 private:
  std::vector<TreeNode> nodes_;
  std::vector<int> parent_;
  std::vector<int> child_index_;
  int root_ = -1;
};

// Same shape and the same label at every position.
bool trees_equal(const Tree& x, const Tree& y);

// Child-index path from the root, "0.1" style; "-" denotes the root itself.
std::string node_path(const Tree& t, int v);

}  // namespace ted
