#include "ted/edit_script.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ted {

EditScript edit_script(const Tree& f, const Tree& g, const CostModel& costs,
                       Algo algo) {
  DistanceEngine e(f, g, costs);
  e.run(algo);
  return e.extract_script();
}

namespace {

void check_f_node(const Tree& f, int v) {
  if (v < 0 || v >= f.node_count())
    throw std::invalid_argument("dangling node reference");
}

// Deletions and relabels applied in place; a deleted node's children move
// up to its position in the parent's child list.
Tree apply_spliced(const Tree& f, const EditScript& s) {
  const int n = f.node_count();
  std::vector<char> touched(n, 0), deleted(n, 0);
  std::vector<const std::string*> new_label(n, nullptr);
  for (const EditOp& op : s.ops) {
    if (op.kind == EditOpKind::delete_g)
      throw std::invalid_argument("script has insertions but no target shape");
    check_f_node(f, op.f_node);
    if (touched[op.f_node]) throw std::invalid_argument("node edited twice");
    touched[op.f_node] = 1;
    if (op.kind == EditOpKind::delete_f) deleted[op.f_node] = 1;
    else new_label[op.f_node] = &op.to_label;
  }
  if (f.empty()) return Tree{};

  // Reverse preorder visits descendants before ancestors, so each deleted
  // node's replacement list is ready when its parent needs it.
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{f.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = f.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<std::vector<int>> lifted(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (!deleted[v]) {
      lifted[v] = {v};
      continue;
    }
    for (int c : f.children(v))
      lifted[v].insert(lifted[v].end(), lifted[c].begin(), lifted[c].end());
  }
  const std::vector<int>& roots = lifted[f.root()];
  if (roots.empty()) return Tree{};
  if (roots.size() != 1)
    throw std::invalid_argument("deleting the root leaves a forest");

  std::vector<TreeNode> out;
  out.reserve(n);
  std::vector<int> new_id(n, -1);
  std::vector<int> walk{roots[0]};
  while (!walk.empty()) {
    const int v = walk.back();
    walk.pop_back();
    new_id[v] = static_cast<int>(out.size());
    out.push_back(TreeNode{new_label[v] ? *new_label[v] : f.label(v), {}});
    // Children of the spliced tree: each original child stands in for its
    // replacement list, so deleted subtrees never enter the walk.
    std::vector<int> eff;
    for (int c : f.children(v))
      eff.insert(eff.end(), lifted[c].begin(), lifted[c].end());
    for (auto it = eff.rbegin(); it != eff.rend(); ++it) walk.push_back(*it);
  }
  // Second pass wires children now that every kept node has its new id.
  for (int v = 0; v < n; ++v) {
    if (new_id[v] < 0) continue;
    for (int c : f.children(v))
      for (int kept : lifted[c]) out[new_id[v]].children.push_back(new_id[kept]);
  }
  return Tree(std::move(out), 0);
}

// Rebuild along the recorded target shape: matched nodes carry their
// (possibly relabeled) source labels, unmatched shape nodes are insertions.
Tree apply_with_shape(const Tree& f, const EditScript& s) {
  const int m = static_cast<int>(s.g_shape.size());
  std::vector<char> f_deleted(f.node_count(), 0);
  std::vector<int> f_matched_at(f.node_count(), -1);
  std::vector<const std::string*> new_label(f.node_count(), nullptr);

  for (int w = 0; w < m; ++w) {
    const int v = s.g_shape[w].match;
    if (v == -1) continue;
    check_f_node(f, v);
    if (f_matched_at[v] != -1) throw std::invalid_argument("node edited twice");
    f_matched_at[v] = w;
  }
  for (const EditOp& op : s.ops) {
    switch (op.kind) {
      case EditOpKind::delete_f:
        check_f_node(f, op.f_node);
        if (f_deleted[op.f_node] || f_matched_at[op.f_node] != -1)
          throw std::invalid_argument("node edited twice");
        f_deleted[op.f_node] = 1;
        break;
      case EditOpKind::relabel:
        check_f_node(f, op.f_node);
        if (f_matched_at[op.f_node] == -1 || new_label[op.f_node])
          throw std::invalid_argument("node edited twice");
        new_label[op.f_node] = &op.to_label;
        break;
      case EditOpKind::delete_g:
        if (op.g_node < 0 || op.g_node >= m)
          throw std::invalid_argument("dangling node reference");
        if (s.g_shape[op.g_node].match != -1)
          throw std::invalid_argument("node edited twice");
        break;
    }
  }
  for (int v = 0; v < f.node_count(); ++v)
    if (!f_deleted[v] && f_matched_at[v] == -1)
      throw std::invalid_argument("script does not cover the first tree");

  if (m == 0) return Tree{};
  std::vector<TreeNode> out(m);
  for (int w = 0; w < m; ++w) {
    const int v = s.g_shape[w].match;
    if (v == -1) out[w].label = s.g_shape[w].label;
    else out[w].label = new_label[v] ? *new_label[v] : f.label(v);
    out[w].children = s.g_shape[w].children;
  }
  return Tree(std::move(out), s.g_root);
}

}  // namespace

Tree apply_script(const Tree& f, const EditScript& script) {
  if (script.g_shape.empty() && script.g_root == -1)
    return apply_spliced(f, script);
  return apply_with_shape(f, script);
}

}  // namespace ted
