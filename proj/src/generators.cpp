#include "ted/generators.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace ted {

namespace {

TreeNode leaf(const char* label = "a") { return TreeNode{label, {}}; }

Tree comb_impl(int n, bool mirrored) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("comb size must be even");
  if (n == 0) return Tree{};
  std::vector<TreeNode> nodes;
  nodes.reserve(n);
  int below = -1;
  for (int i = 1; i <= n / 2; ++i) {
    nodes.push_back(leaf());
    const int lf = static_cast<int>(nodes.size()) - 1;
    TreeNode spine{"a", {}};
    if (below != -1) spine.children.push_back(below);
    if (mirrored)
      spine.children.insert(spine.children.begin(), lf);
    else
      spine.children.push_back(lf);
    nodes.push_back(std::move(spine));
    below = static_cast<int>(nodes.size()) - 1;
  }
  return Tree(std::move(nodes), below);
}

}  // namespace

Tree gen_path(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n == 0) return Tree{};
  std::vector<TreeNode> nodes(n, leaf());
  for (int v = 0; v + 1 < n; ++v) nodes[v].children.push_back(v + 1);
  return Tree(std::move(nodes), 0);
}

Tree gen_comb(int n) { return comb_impl(n, false); }

Tree gen_comb_mirror(int n) { return comb_impl(n, true); }

Tree gen_balanced(int k) {
  if (k < 0) throw std::invalid_argument("negative depth");
  const int n = (1 << (k + 1)) - 1;
  std::vector<TreeNode> nodes(n, leaf());
  // Heap layout: children of v are 2v+1 and 2v+2.
  for (int v = 0; 2 * v + 2 < n; ++v) nodes[v].children = {2 * v + 1, 2 * v + 2};
  return Tree(std::move(nodes), 0);
}

Tree gen_zigzag(int m) {
  if (m < 0 || m % 4 != 0) throw std::invalid_argument("zigzag size must be divisible by 4");
  if (m == 0) return Tree{};
  std::vector<TreeNode> nodes;
  nodes.reserve(m);
  int below = -1;  // root of the unit built so far
  for (int j = 1; j <= m / 4; ++j) {
    nodes.push_back(leaf());
    const int left_leaf = static_cast<int>(nodes.size()) - 1;
    TreeNode wl{"a", {left_leaf}};
    if (below != -1) wl.children.push_back(below);
    nodes.push_back(std::move(wl));
    const int wl_id = static_cast<int>(nodes.size()) - 1;
    nodes.push_back(leaf());
    const int right_leaf = static_cast<int>(nodes.size()) - 1;
    nodes.push_back(TreeNode{"a", {wl_id, right_leaf}});
    below = static_cast<int>(nodes.size()) - 1;
  }
  return Tree(std::move(nodes), below);
}

Tree gen_random(int n, std::uint64_t seed, int max_children, int alphabet) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (max_children < 1) throw std::invalid_argument("max_children must be positive");
  if (alphabet < 1 || alphabet > 26) throw std::invalid_argument("alphabet out of range");
  if (n == 0) return Tree{};
  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
  std::vector<TreeNode> nodes(n);
  std::vector<int> open{0};  // nodes that can still take children
  nodes[0].label = static_cast<char>('a' + pick(alphabet));
  for (int v = 1; v < n; ++v) {
    const int slot = pick(open.size());
    const int p = open[slot];
    nodes[p].children.push_back(v);
    if (static_cast<int>(nodes[p].children.size()) == max_children) {
      open[slot] = open.back();
      open.pop_back();
    }
    nodes[v].label = static_cast<char>('a' + pick(alphabet));
    open.push_back(v);
  }
  return Tree(std::move(nodes), 0);
}

}  // namespace ted
