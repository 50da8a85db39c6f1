#include "ted/tree.hpp"

#include <stdexcept>
#include <utility>

namespace ted {

Tree::Tree(std::vector<TreeNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  const int n = static_cast<int>(nodes_.size());
  if (n == 0) {
    if (root != -1) throw std::invalid_argument("root id out of range");
    return;
  }
  if (root < 0 || root >= n) throw std::invalid_argument("root id out of range");
  parent_.assign(n, -1);
  child_index_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (nodes_[v].label.empty()) throw std::invalid_argument("empty label");
    const auto& ch = nodes_[v].children;
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
      const int c = ch[i];
      if (c < 0 || c >= n) throw std::invalid_argument("child id out of range");
      if (c == root_) throw std::invalid_argument("root has a parent");
      if (parent_[c] != -1 || c == v) throw std::invalid_argument("node has two parents");
      parent_[c] = v;
      child_index_[c] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (v != root_ && parent_[v] == -1) throw std::invalid_argument("unreachable node");
  // Parent links are acyclic because every non-root has exactly one parent and
  // the root has none; a cycle would leave some node unreferenced.
}

bool trees_equal(const Tree& x, const Tree& y) {
  if (x.node_count() != y.node_count()) return false;
  if (x.empty()) return true;
  std::vector<std::pair<int, int>> stack{{x.root(), y.root()}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (x.label(a) != y.label(b)) return false;
    const auto& ca = x.children(a);
    const auto& cb = y.children(b);
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i) stack.emplace_back(ca[i], cb[i]);
  }
  return true;
}

std::string node_path(const Tree& t, int v) {
  if (v == t.root()) return "-";
  std::vector<int> steps;
  for (int u = v; u != t.root(); u = t.parent(u)) steps.push_back(t.child_index(u));
  std::string out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!out.empty()) out.push_back('.');
    out += std::to_string(*it);
  }
  return out;
}

}  // namespace ted
