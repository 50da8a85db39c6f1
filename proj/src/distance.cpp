#include "ted/distance.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flat_map.hpp"
#include "ted/edit_script.hpp"

namespace ted {

namespace {

using detail::Key128;
using detail::SubproblemMap;

Key128 pair_key(const Subforest& f, const Subforest& g) {
  return (static_cast<Key128>(f.key()) << 64) | g.key();
}

// Dense relabel lookups stay affordable up to this many label pairs.
constexpr std::size_t kRelCacheLimit = std::size_t{1} << 22;

}  // namespace

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::shasha_zhang: return "sz";
    case Algo::klein: return "klein";
    case Algo::dmrw: return "dmrw";
  }
  return "unknown";
}

struct DistanceEngine::Impl {
  // Owned copies so the engine outlives caller temporaries; every index and
  // label table below points into these.
  Tree ftree, gtree;
  const Tree* f;
  const Tree* g;
  CostModel costs;
  TreeIndex fi, gi;

  // Deletion cost per node id and its prefix sums by postorder rank, so a
  // base case is one range sum plus a short walk over excluded ancestors.
  std::vector<long long> del_f, del_g;
  std::vector<long long> delpre_f, delpre_g;

  // Interned labels with a dense relabel matrix for small alphabets.
  std::vector<int> lab_f, lab_g;
  std::size_t nlab_g = 0;
  std::vector<long long> rel_cache;
  bool use_cache = false;

  SubproblemMap memo;
  bool ran = false;
  Strategy run_strategy;
  RunStats stats;

  struct Frame {
    Subforest sf, sg;
    Key128 key = 0;
    Key128 ck[4] = {0, 0, 0, 0};  // delete-f, delete-g, inner, rest
    long long op_del_f = 0, op_del_g = 0, op_rel = 0;
    bool expanded = false;
  };
  std::vector<Frame> frames;

  Impl(const Tree& tf, const Tree& tg, const CostModel& c)
      : ftree(tf), gtree(tg), f(&ftree), g(&gtree), costs(c),
        fi(build_index(ftree)), gi(build_index(gtree)) {
    build_cost_tables();
  }

  void build_cost_tables() {
    std::map<std::string, int> pool_f, pool_g;
    std::vector<const std::string*> names_f, names_g;
    auto intern = [](const std::string& s, std::map<std::string, int>& pool,
                     std::vector<const std::string*>& names) {
      auto [it, fresh] = pool.emplace(s, static_cast<int>(names.size()));
      if (fresh) names.push_back(&it->first);
      return it->second;
    };

    del_f.resize(f->node_count());
    lab_f.resize(f->node_count());
    for (int v = 0; v < f->node_count(); ++v) {
      del_f[v] = costs.del(f->label(v));
      lab_f[v] = intern(f->label(v), pool_f, names_f);
    }
    del_g.resize(g->node_count());
    lab_g.resize(g->node_count());
    for (int w = 0; w < g->node_count(); ++w) {
      del_g[w] = costs.del(g->label(w));
      lab_g[w] = intern(g->label(w), pool_g, names_g);
    }

    delpre_f.assign(fi.n() + 1, 0);
    for (int r = 1; r <= fi.n(); ++r)
      delpre_f[r] = delpre_f[r - 1] + del_f[fi.node_at_post(r)];
    delpre_g.assign(gi.n() + 1, 0);
    for (int r = 1; r <= gi.n(); ++r)
      delpre_g[r] = delpre_g[r - 1] + del_g[gi.node_at_post(r)];

    nlab_g = names_g.size();
    if (names_f.size() * nlab_g <= kRelCacheLimit) {
      rel_cache.resize(names_f.size() * nlab_g);
      for (std::size_t i = 0; i < names_f.size(); ++i)
        for (std::size_t j = 0; j < nlab_g; ++j)
          rel_cache[i * nlab_g + j] = costs.rel(*names_f[i], *names_g[j]);
      use_cache = true;
    }
  }

  long long rel_cost(int vf, int vg) const {
    if (use_cache) return rel_cache[lab_f[vf] * nlab_g + lab_g[vg]];
    return costs.rel(f->label(vf), g->label(vg));
  }

  static long long del_sum(const Subforest& s, const TreeIndex& ix,
                           const std::vector<long long>& per_node,
                           const std::vector<long long>& prefix) {
    if (s.empty()) return 0;
    const int l = s.leftmost_root();
    const int q = ix.n() - s.right_deletions();
    long long r = prefix[q] - prefix[ix.post(l) - ix.size(l)];
    for (int u = ix.parent(l); u != -1 && ix.post(u) <= q; u = ix.parent(u))
      r -= per_node[u];
    return r;
  }

  long long base_cost(const Subforest& sf, const Subforest& sg) const {
    return del_sum(sf, fi, del_f, delpre_f) + del_sum(sg, gi, del_g, delpre_g);
  }

  // Iterative solve over an explicit frame stack; every subforest pair it
  // touches ends up memoized, base cases included.
  long long solve(const Subforest& sf0, const Subforest& sg0, const Strategy& dir) {
    const Key128 k0 = pair_key(sf0, sg0);
    if (const long long* v = memo.find(k0)) return *v;

    frames.clear();
    frames.push_back(Frame{sf0, sg0, k0, {}, 0, 0, 0, false});
    while (!frames.empty()) {
      const std::size_t idx = frames.size() - 1;
      if (!frames[idx].expanded) {
        const Subforest sf = frames[idx].sf;
        const Subforest sg = frames[idx].sg;
        if (memo.find(frames[idx].key)) {
          frames.pop_back();
          continue;
        }
        if (sf.empty() || sg.empty()) {
          memo.insert(frames[idx].key, base_cost(sf, sg));
          frames.pop_back();
          continue;
        }
        const bool right = dir(sf, sg) == Direction::right;
        const int rf = right ? sf.rightmost_root() : sf.leftmost_root();
        const int rg = right ? sg.rightmost_root() : sg.leftmost_root();
        const Subforest fdel = right ? sf.delete_right() : sf.delete_left();
        const Subforest gdel = right ? sg.delete_right() : sg.delete_left();
        const Subforest finner = rootless_subtree(fi, rf);
        const Subforest ginner = rootless_subtree(gi, rg);
        const Subforest frest = right ? sf.drop_rightmost_tree() : sf.drop_leftmost_tree();
        const Subforest grest = right ? sg.drop_rightmost_tree() : sg.drop_leftmost_tree();

        Frame& fr = frames[idx];
        fr.ck[0] = pair_key(fdel, sg);
        fr.ck[1] = pair_key(sf, gdel);
        fr.ck[2] = pair_key(finner, ginner);
        fr.ck[3] = pair_key(frest, grest);
        fr.op_del_f = del_f[rf];
        fr.op_del_g = del_g[rg];
        fr.op_rel = rel_cost(rf, rg);
        fr.expanded = true;

        bool pushed = false;
        auto need = [&](const Subforest& a, const Subforest& b, Key128 k) {
          if (!memo.find(k)) {
            frames.push_back(Frame{a, b, k, {}, 0, 0, 0, false});
            pushed = true;
          }
        };
        const Key128 k_delf = pair_key(fdel, sg);
        need(fdel, sg, k_delf);
        need(sf, gdel, pair_key(sf, gdel));
        need(finner, ginner, pair_key(finner, ginner));
        need(frest, grest, pair_key(frest, grest));
        if (pushed) continue;
      }
      const Frame& fr = frames[idx];
      const long long by_del_f = *memo.find(fr.ck[0]) + fr.op_del_f;
      const long long by_del_g = *memo.find(fr.ck[1]) + fr.op_del_g;
      const long long by_match =
          *memo.find(fr.ck[2]) + *memo.find(fr.ck[3]) + fr.op_rel;
      memo.insert(fr.key, std::min({by_del_f, by_del_g, by_match}));
      frames.pop_back();
    }
    return *memo.find(k0);
  }

  // Recursive phase: peel the driving side into its top light subtrees,
  // solve those pairs first, then run the strategy phase on this pair. All
  // calls share the one memo, so overlapping work collapses.
  void dmrw_pair(const Subforest& sf, const Subforest& sg) {
    if (memo.find(pair_key(sf, sg))) return;
    if (sf.empty() || sg.empty()) {
      solve(sf, sg, rightmost_strategy());
      return;
    }
    const bool f_drives = sf.node_count() >= sg.node_count();
    if (f_drives) {
      for (int u : fi.toplight_of(sf.leftmost_root()))
        dmrw_pair(subtree_subforest(fi, u), sg);
    } else {
      for (int u : gi.toplight_of(sg.leftmost_root()))
        dmrw_pair(sf, subtree_subforest(gi, u));
    }
    solve(sf, sg, klein_strategy(!f_drives));
  }

  void reset() {
    memo.clear();
    stats = RunStats{};
    ran = false;
  }

  void finalize_stats() {
    stats.subproblem_count = memo.size();
    stats.peak_memo_entries = memo.size();
    std::vector<std::uint64_t> side_f, side_g;
    side_f.reserve(memo.size());
    side_g.reserve(memo.size());
    memo.for_each([&](Key128 k, long long) {
      side_f.push_back(static_cast<std::uint64_t>(k >> 64));
      side_g.push_back(static_cast<std::uint64_t>(k));
    });
    std::sort(side_f.begin(), side_f.end());
    std::sort(side_g.begin(), side_g.end());
    stats.f_subforest_count =
        std::unique(side_f.begin(), side_f.end()) - side_f.begin();
    stats.g_subforest_count =
        std::unique(side_g.begin(), side_g.end()) - side_g.begin();
    ran = true;
  }
};

DistanceEngine::DistanceEngine(const Tree& f, const Tree& g, const CostModel& costs)
    : impl_(std::make_unique<Impl>(f, g, costs)) {}

DistanceEngine::~DistanceEngine() = default;
DistanceEngine::DistanceEngine(DistanceEngine&&) noexcept = default;
DistanceEngine& DistanceEngine::operator=(DistanceEngine&&) noexcept = default;

long long DistanceEngine::run(Algo algo) {
  Impl& im = *impl_;
  im.reset();
  const Subforest wf = Subforest::whole(im.fi);
  const Subforest wg = Subforest::whole(im.gi);
  long long cost = 0;
  switch (algo) {
    case Algo::shasha_zhang:
      im.run_strategy = rightmost_strategy();
      cost = im.solve(wf, wg, im.run_strategy);
      break;
    case Algo::klein:
      im.run_strategy = klein_strategy(im.gi.n() > im.fi.n());
      cost = im.solve(wf, wg, im.run_strategy);
      break;
    case Algo::dmrw:
      im.dmrw_pair(wf, wg);
      im.run_strategy = klein_strategy(im.gi.n() > im.fi.n());
      cost = *im.memo.find(pair_key(wf, wg));
      break;
  }
  im.finalize_stats();
  return cost;
}

long long DistanceEngine::run(const Strategy& strategy) {
  Impl& im = *impl_;
  im.reset();
  im.run_strategy = strategy;
  const long long cost = im.solve(Subforest::whole(im.fi),
                                  Subforest::whole(im.gi), strategy);
  im.finalize_stats();
  return cost;
}

DistanceResult DistanceEngine::result() const {
  const Impl& im = *impl_;
  if (!im.ran) throw std::logic_error("no distance run to report");
  const long long* v =
      im.memo.find(pair_key(Subforest::whole(im.fi), Subforest::whole(im.gi)));
  assert(v != nullptr);
  return DistanceResult{*v, im.stats};
}

bool DistanceEngine::memo_contains(const Subforest& f, const Subforest& g) const {
  return impl_->memo.find(pair_key(f, g)) != nullptr;
}

std::size_t DistanceEngine::memo_size() const { return impl_->memo.size(); }
const TreeIndex& DistanceEngine::f_index() const { return impl_->fi; }
const TreeIndex& DistanceEngine::g_index() const { return impl_->gi; }

EditScript DistanceEngine::extract_script() {
  Impl& im = *impl_;
  if (!im.ran) throw std::logic_error("no distance run to extract from");

  EditScript s;
  s.g_shape.resize(im.g->node_count());
  for (int w = 0; w < im.g->node_count(); ++w) {
    s.g_shape[w].label = im.g->label(w);
    s.g_shape[w].children = im.g->children(w);
  }
  s.g_root = im.g->empty() ? -1 : im.g->root();

  const Subforest wf = Subforest::whole(im.fi);
  const Subforest wg = Subforest::whole(im.gi);
  s.total_cost = im.solve(wf, wg, im.run_strategy);

  // Backtracks the recursion, preferring match, then deletion from the
  // first tree. Any branch the forward pass skipped is solved on demand;
  // memoized values are exact for every strategy, so mixing runs is safe.
  std::vector<std::pair<Subforest, Subforest>> todo;
  todo.emplace_back(wf, wg);
  while (!todo.empty()) {
    const auto [sf, sg] = todo.back();
    todo.pop_back();
    if (sf.empty() && sg.empty()) continue;
    if (sg.empty()) {
      for (int v : sf.nodes())
        s.ops.push_back(EditOp{EditOpKind::delete_f, v, -1, im.f->label(v), ""});
      continue;
    }
    if (sf.empty()) {
      for (int w : sg.nodes())
        s.ops.push_back(EditOp{EditOpKind::delete_g, -1, w, "", im.g->label(w)});
      continue;
    }
    const bool right = im.run_strategy(sf, sg) == Direction::right;
    const int rf = right ? sf.rightmost_root() : sf.leftmost_root();
    const int rg = right ? sg.rightmost_root() : sg.leftmost_root();
    const Subforest fdel = right ? sf.delete_right() : sf.delete_left();
    const Subforest gdel = right ? sg.delete_right() : sg.delete_left();
    const Subforest finner = rootless_subtree(im.fi, rf);
    const Subforest ginner = rootless_subtree(im.gi, rg);
    const Subforest frest = right ? sf.drop_rightmost_tree() : sf.drop_leftmost_tree();
    const Subforest grest = right ? sg.drop_rightmost_tree() : sg.drop_leftmost_tree();

    const long long total = im.solve(sf, sg, im.run_strategy);
    const long long by_match = im.solve(finner, ginner, im.run_strategy) +
                               im.solve(frest, grest, im.run_strategy) +
                               im.rel_cost(rf, rg);
    if (by_match == total) {
      s.g_shape[rg].match = rf;
      if (im.f->label(rf) != im.g->label(rg) || im.rel_cost(rf, rg) > 0)
        s.ops.push_back(EditOp{EditOpKind::relabel, rf, rg, im.f->label(rf),
                               im.g->label(rg)});
      todo.emplace_back(frest, grest);
      todo.emplace_back(finner, ginner);
      continue;
    }
    const long long by_del_f = im.solve(fdel, sg, im.run_strategy) + im.del_f[rf];
    if (by_del_f == total) {
      s.ops.push_back(EditOp{EditOpKind::delete_f, rf, -1, im.f->label(rf), ""});
      todo.emplace_back(fdel, sg);
      continue;
    }
    assert(im.solve(sf, gdel, im.run_strategy) + im.del_g[rg] == total);
    s.ops.push_back(EditOp{EditOpKind::delete_g, -1, rg, "", im.g->label(rg)});
    todo.emplace_back(sf, gdel);
  }
  return s;
}

namespace {

DistanceResult run_once(const Tree& f, const Tree& g, const CostModel& costs, Algo algo) {
  DistanceEngine e(f, g, costs);
  e.run(algo);
  return e.result();
}

}  // namespace

DistanceResult distance_sz(const Tree& f, const Tree& g, const CostModel& costs) {
  return run_once(f, g, costs, Algo::shasha_zhang);
}

DistanceResult distance_klein(const Tree& f, const Tree& g, const CostModel& costs) {
  return run_once(f, g, costs, Algo::klein);
}

DistanceResult distance_dmrw(const Tree& f, const Tree& g, const CostModel& costs) {
  return run_once(f, g, costs, Algo::dmrw);
}

DistanceResult distance_strategy(const Tree& f, const Tree& g,
                                 const CostModel& costs, const Strategy& strategy) {
  DistanceEngine e(f, g, costs);
  e.run(strategy);
  return e.result();
}

}  // namespace ted
