// Exact tree edit distance via forest decomposition, with subproblem
// accounting. Each engine owns one memo table shared by every recursive
// call of the run, so repeated subforest pairs are solved once.
#pragma once

#include <cstddef>
#include <memory>

#include "ted/cost_model.hpp"
#include "ted/strategy.hpp"
#include "ted/tree.hpp"
#include "ted/tree_index.hpp"

namespace ted {

struct EditScript;

enum class Algo { shasha_zhang, klein, dmrw };

const char* algo_name(Algo algo);

struct RunStats {
  // Distinct memoized subforest pairs, base cases included.
  unsigned long long subproblem_count = 0;
  unsigned long long peak_memo_entries = 0;
  // Distinct per-side subforests over all memoized pairs.
  unsigned long long f_subforest_count = 0;
  unsigned long long g_subforest_count = 0;
};

struct DistanceResult {
  long long cost = 0;
  RunStats stats;
};

class DistanceEngine {
 public:
  DistanceEngine(const Tree& f, const Tree& g, const CostModel& costs);
  ~DistanceEngine();
  DistanceEngine(DistanceEngine&&) noexcept;
  DistanceEngine& operator=(DistanceEngine&&) noexcept;
  DistanceEngine(const DistanceEngine&) = delete;
  DistanceEngine& operator=(const DistanceEngine&) = delete;

  // Computes the distance, replacing any previous run's memo.
  long long run(Algo algo);
  long long run(const Strategy& strategy);

  // Cost and accounting for the last run.
  DistanceResult result() const;

  // Operation list for the last run. Backtracking may solve subproblems
  // the forward pass skipped, so the memo can grow; stats are unaffected.
  EditScript extract_script();

  bool memo_contains(const Subforest& f, const Subforest& g) const;
  std::size_t memo_size() const;
  const TreeIndex& f_index() const;
  const TreeIndex& g_index() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

DistanceResult distance_sz(const Tree& f, const Tree& g, const CostModel& costs);
DistanceResult distance_klein(const Tree& f, const Tree& g, const CostModel& costs);
DistanceResult distance_dmrw(const Tree& f, const Tree& g, const CostModel& costs);
DistanceResult distance_strategy(const Tree& f, const Tree& g,
                                 const CostModel& costs, const Strategy& strategy);

// Exhaustive minimum over all order-preserving node mappings. Intended as
// an independent reference for tiny inputs; throws if either tree has more
// than 8 nodes.
long long oracle_distance(const Tree& f, const Tree& g, const CostModel& costs);

}  // namespace ted
