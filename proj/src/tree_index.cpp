#include "ted/tree_index.hpp"

namespace ted {

TreeIndex build_index(const Tree& t) {
  TreeIndex ix;
  ix.tree_ = &t;
  const int n = t.node_count();
  ix.n_ = n;
  ix.pre_.assign(n, 0);
  ix.post_.assign(n, 0);
  ix.size_.assign(n, 1);
  ix.node_at_pre_.assign(n, -1);
  ix.node_at_post_.assign(n, -1);
  ix.heavy_child_.assign(n, -1);
  ix.ldepth_.assign(n, 0);
  ix.cdepth_.assign(n, 0);
  ix.light_.assign(n, 0);
  ix.keyroot_.assign(n, 0);
  if (n == 0) return ix;

  // One iterative depth-first pass: preorder rank on entry, postorder rank
  // and subtree size on exit.
  int pre_rank = 0, post_rank = 0;
  std::vector<std::pair<int, int>> stack;  // (node, next child position)
  stack.emplace_back(t.root(), 0);
  ix.pre_[t.root()] = ++pre_rank;
  ix.node_at_pre_[pre_rank - 1] = t.root();
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    const auto& ch = t.children(v);
    if (pos < static_cast<int>(ch.size())) {
      const int c = ch[pos++];
      ix.pre_[c] = ++pre_rank;
      ix.node_at_pre_[pre_rank - 1] = c;
      stack.emplace_back(c, 0);
    } else {
      ix.post_[v] = ++post_rank;
      ix.node_at_post_[post_rank - 1] = v;
      for (int c : ch) ix.size_[v] += ix.size_[c];
      stack.pop_back();
    }
  }

  for (int v = 0; v < n; ++v) {
    const auto& ch = t.children(v);
    int heavy = -1, best = 0;
    for (int c : ch)
      if (ix.size_[c] > best) {
        best = ix.size_[c];
        heavy = c;
      }
    ix.heavy_child_[v] = heavy;
  }
  for (int v = 0; v < n; ++v) {
    const int p = t.parent(v);
    ix.light_[v] = (p != -1 && ix.heavy_child_[p] != v) ? 1 : 0;
    ix.keyroot_[v] = (p == -1 || t.child_index(v) > 0) ? 1 : 0;
  }
  // Preorder rank order visits parents before children, so the counting
  // recurrences below see finished parent values.
  for (int r = 1; r <= n; ++r) {
    const int v = ix.node_at_pre_[r - 1];
    const int p = t.parent(v);
    ix.ldepth_[v] = (p == -1 ? 0 : ix.ldepth_[p]) + (ix.light_[v] ? 1 : 0);
    ix.cdepth_[v] = (p == -1 ? 0 : ix.cdepth_[p]) + (ix.keyroot_[v] ? 1 : 0);
  }
  for (int r = 1; r <= n; ++r) {
    const int v = ix.node_at_pre_[r - 1];
    if (ix.keyroot_[v]) ix.keyroots_.push_back(v);
  }
  if (n > 0) ix.toplight_root_ = ix.toplight_of(t.root());
  return ix;
}

std::vector<int> TreeIndex::toplight_of(int v) const {
  std::vector<int> out;
  for (int u = v; u != -1; u = heavy_child_[u])
    for (int c : tree_->children(u))
      if (c != heavy_child_[u]) out.push_back(c);
  return out;
}

}  // namespace ted
