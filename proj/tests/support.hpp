// Test-side reference machinery. Everything here recomputes results from
// first principles (node sets, plain recursion, classic DP) so library
// results are checked against an independent path, not against themselves.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ted/cost_model.hpp"
#include "ted/tree.hpp"

namespace tedtest {

using ted::CostModel;
using ted::Tree;
using ted::TreeNode;

// Deterministic integer in [0, bound) independent of the standard library's
// distribution implementations.
inline int pick(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// Traversal ranks computed with a local recursive walk.
struct RefOrders {
  std::vector<int> pre, post;
  std::vector<int> by_pre;

  explicit RefOrders(const Tree& t)
      : pre(t.node_count(), -1), post(t.node_count(), -1) {
    int pr = 0, po = 0;
    std::function<void(int)> walk = [&](int v) {
      pre[v] = pr++;
      by_pre.push_back(v);
      for (int c : t.children(v)) walk(c);
      post[v] = po++;
    };
    if (!t.empty()) walk(t.root());
  }

  bool is_ancestor(int u, int v) const {  // strict
    return pre[u] < pre[v] && post[u] > post[v];
  }
};

// A forest as an explicit node-id set. Operations mirror what root
// deletions do to the set itself, with no canonical-form bookkeeping.
struct SimForest {
  std::vector<int> ids;  // sorted by id

  static SimForest whole(const Tree& t) {
    SimForest s;
    for (int v = 0; v < t.node_count(); ++v) s.ids.push_back(v);
    return s;
  }

  bool empty() const { return ids.empty(); }
  int count() const { return static_cast<int>(ids.size()); }

  int leftmost_root(const RefOrders& o) const {
    int best = ids.front();
    for (int v : ids)
      if (o.pre[v] < o.pre[best]) best = v;
    return best;
  }

  int rightmost_root(const RefOrders& o) const {
    int best = ids.front();
    for (int v : ids)
      if (o.post[v] > o.post[best]) best = v;
    return best;
  }

  SimForest without(int v) const {
    SimForest s = *this;
    s.ids.erase(std::find(s.ids.begin(), s.ids.end(), v));
    return s;
  }

  // Nodes of the end tree rooted at r: r and its in-set descendants.
  SimForest tree_of(int r, const RefOrders& o) const {
    SimForest s;
    for (int v : ids)
      if (v == r || o.is_ancestor(r, v)) s.ids.push_back(v);
    return s;
  }

  SimForest minus(const SimForest& other) const {
    SimForest s;
    std::set_difference(ids.begin(), ids.end(), other.ids.begin(),
                        other.ids.end(), std::back_inserter(s.ids));
    return s;
  }

  bool operator<(const SimForest& o) const { return ids < o.ids; }
  bool operator==(const SimForest& o) const { return ids == o.ids; }
};

// Plain unmemoized recursion over node-set pairs, logging every pair it
// visits. Distances are exact; the distinct-pair log doubles as the
// expected memo content for the same direction choices.
struct NaiveRef {
  const Tree& f;
  const Tree& g;
  const CostModel& costs;
  RefOrders of, og;
  // left = false means take the rightmost roots.
  std::function<bool(const SimForest&, const SimForest&)> go_left;
  std::set<std::pair<SimForest, SimForest>> visited;

  NaiveRef(const Tree& tf, const Tree& tg, const CostModel& c)
      : f(tf), g(tg), costs(c), of(tf), og(tg) {
    go_left = [](const SimForest&, const SimForest&) { return false; };
  }

  long long del_sum(const SimForest& s, const Tree& t) const {
    long long r = 0;
    for (int v : s.ids) r += costs.del(t.label(v));
    return r;
  }

  long long delta(const SimForest& sf, const SimForest& sg) {
    visited.insert({sf, sg});
    if (sf.empty() && sg.empty()) return 0;
    if (sf.empty()) return del_sum(sg, g);
    if (sg.empty()) return del_sum(sf, f);
    const bool left = go_left(sf, sg);
    const int rf = left ? sf.leftmost_root(of) : sf.rightmost_root(of);
    const int rg = left ? sg.leftmost_root(og) : sg.rightmost_root(og);
    const SimForest ftree = sf.tree_of(rf, of);
    const SimForest gtree = sg.tree_of(rg, og);
    const long long by_del_f = delta(sf.without(rf), sg) + costs.del(f.label(rf));
    const long long by_del_g = delta(sf, sg.without(rg)) + costs.del(g.label(rg));
    const long long by_match = delta(ftree.without(rf), gtree.without(rg)) +
                               delta(sf.minus(ftree), sg.minus(gtree)) +
                               costs.rel(f.label(rf), g.label(rg));
    return std::min({by_del_f, by_del_g, by_match});
  }

  long long run() {
    visited.clear();
    return delta(SimForest::whole(f), SimForest::whole(g));
  }

  // Klein-like direction for the fixed driving side.
  void drive_by_end_trees(bool g_drives) {
    go_left = [this, g_drives](const SimForest& sf, const SimForest& sg) {
      const SimForest& d = g_drives ? sg : sf;
      const RefOrders& o = g_drives ? og : of;
      return d.tree_of(d.leftmost_root(o), o).count() <=
             d.tree_of(d.rightmost_root(o), o).count();
    };
  }
};

inline long long string_edit(const std::string& x, const std::string& y) {
  std::vector<long long> row(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) row[j] = static_cast<long long>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    long long diag = row[0];
    row[0] = static_cast<long long>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const long long sub = diag + (x[i - 1] == y[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[y.size()];
}

inline Tree path_tree(const std::string& labels) {
  if (labels.empty()) return Tree{};
  std::vector<TreeNode> nodes(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    nodes[i].label = std::string(1, labels[i]);
    if (i + 1 < labels.size()) nodes[i].children = {static_cast<int>(i) + 1};
  }
  return Tree(std::move(nodes), 0);
}

// Root labeled `label` over the given subtrees, left to right.
inline Tree join(const std::string& label, const std::vector<Tree>& subtrees) {
  std::vector<TreeNode> nodes;
  nodes.push_back(TreeNode{label, {}});
  for (const Tree& s : subtrees) {
    const int base = static_cast<int>(nodes.size());
    nodes[0].children.push_back(base);
    for (int v = 0; v < s.node_count(); ++v) {
      TreeNode n{s.label(v), {}};
      for (int c : s.children(v)) n.children.push_back(c + base);
      nodes.push_back(std::move(n));
    }
  }
  return Tree(std::move(nodes), 0);
}

// Every ordered shape with exactly k nodes, uniform label "a".
// Counts follow the Catalan numbers: 1, 1, 2, 5, 14, 42.
inline std::vector<Tree> all_shapes(int k) {
  if (k <= 0) return {};
  if (k == 1) return {join("a", {})};
  std::vector<Tree> out;
  // First subtree takes s nodes, the rest of the children take the rest.
  std::function<std::vector<std::vector<Tree>>(int)> forests = [&](int n) {
    std::vector<std::vector<Tree>> result;
    if (n == 0) {
      result.push_back({});
      return result;
    }
    for (int s = 1; s <= n; ++s)
      for (const Tree& first : all_shapes(s))
        for (const std::vector<Tree>& rest : forests(n - s)) {
          std::vector<Tree> combo{first};
          combo.insert(combo.end(), rest.begin(), rest.end());
          result.push_back(std::move(combo));
        }
    return result;
  };
  for (const std::vector<Tree>& kids : forests(k - 1)) out.push_back(join("a", kids));
  return out;
}

// Random labeled tree built by attaching each node to a random earlier
// node; independent of the library's generator.
inline Tree random_tree(std::mt19937_64& rng, int n, int alphabet) {
  if (n == 0) return Tree{};
  std::vector<TreeNode> nodes(n);
  for (int v = 0; v < n; ++v) {
    nodes[v].label = std::string(1, static_cast<char>('a' + pick(rng, alphabet)));
    if (v > 0) nodes[pick(rng, v)].children.push_back(v);
  }
  return Tree(std::move(nodes), 0);
}

}  // namespace tedtest
