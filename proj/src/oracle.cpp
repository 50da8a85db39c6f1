#include <stdexcept>
#include <vector>

#include "ted/distance.hpp"

namespace ted {

namespace {

// Traversal ranks computed locally so the reference result shares no
// machinery with the solver it checks.
struct Orders {
  std::vector<int> pre, post, by_pre;  // ranks per node, nodes in preorder
  long long del_total = 0;
};

Orders order_of(const Tree& t, const CostModel& costs) {
  Orders o;
  o.pre.assign(t.node_count(), 0);
  o.post.assign(t.node_count(), 0);
  if (t.empty()) return o;
  int pre_rank = 0, post_rank = 0;
  std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == 0) {
      o.pre[v] = pre_rank++;
      o.by_pre.push_back(v);
      o.del_total += costs.del(t.label(v));
    }
    if (next < t.children(v).size()) {
      const int c = t.children(v)[next++];
      stack.emplace_back(c, 0);
    } else {
      o.post[v] = post_rank++;
      stack.pop_back();
    }
  }
  return o;
}

struct Search {
  const Tree* f;
  const Tree* g;
  const CostModel* costs;
  Orders of, og;
  std::vector<std::pair<int, int>> chosen;  // (f node, g node), pre-ascending
  long long best = 0;

  // Mappings must preserve both traversal orders pairwise. The f side is
  // scanned in preorder, so a candidate only needs checking against the
  // already chosen pairs.
  bool compatible(int v, int w) const {
    for (const auto& [pv, pw] : chosen) {
      if (og.pre[pw] >= og.pre[w]) return false;
      if ((of.post[pv] < of.post[v]) != (og.post[pw] < og.post[w])) return false;
    }
    return true;
  }

  void rec(std::size_t i, long long mapped_cost, long long saved_del) {
    if (i == of.by_pre.size()) {
      const long long total = mapped_cost + of.del_total + og.del_total - saved_del;
      if (total < best) best = total;
      return;
    }
    const int v = of.by_pre[i];
    rec(i + 1, mapped_cost, saved_del);
    for (int w = 0; w < g->node_count(); ++w) {
      bool used = false;
      for (const auto& [pv, pw] : chosen) used = used || pw == w;
      if (used || !compatible(v, w)) continue;
      chosen.emplace_back(v, w);
      rec(i + 1, mapped_cost + costs->rel(f->label(v), g->label(w)),
          saved_del + costs->del(f->label(v)) + costs->del(g->label(w)));
      chosen.pop_back();
    }
  }
};

}  // namespace

long long oracle_distance(const Tree& f, const Tree& g, const CostModel& costs) {
  if (f.node_count() > 8 || g.node_count() > 8)
    throw std::invalid_argument("oracle size limit");
  Search s;
  s.f = &f;
  s.g = &g;
  s.costs = &costs;
  s.of = order_of(f, costs);
  s.og = order_of(g, costs);
  s.best = s.of.del_total + s.og.del_total;
  s.rec(0, 0, 0);
  return s.best;
}

}  // namespace ted
