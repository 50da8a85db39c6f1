// Subproblem accounting turned into checkable claims: an exact predicate
// for the cubic bound on the recursive algorithm, and growth tables that
// show how counts scale when instance sizes double.
#pragma once

#include <string>
#include <vector>

#include "ted/distance.hpp"

namespace ted {

struct BoundCheck {
  bool within = false;
  unsigned long long count = 0;
  // 4 (nm)^{3/2}, for reporting; the predicate itself is evaluated as
  // count^2 <= 16 (nm)^3 in integer arithmetic so no rounding can flip it.
  long double stated_bound = 0;
  // count / (m^2 n (1 + log2(n/m))) with n the larger side; the constant
  // multiplying the finer bound this run actually exhibited.
  double empirical_constant = 0;
};

// Empty trees pass vacuously. n and m are the two tree sizes in either order.
BoundCheck check_dmrw_bound(const RunStats& stats, int n, int m);

struct GrowthRow {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string algorithm;
  unsigned long long count = 0;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;

  // Header "instance,n,m,algorithm,count", one row per line.
  std::string to_csv() const;

  // Consecutive count ratios for one family and algorithm, in the order the
  // sizes were given. Doubling the size should show the algorithm's
  // polynomial degree as an approximate power of two.
  std::vector<double> doubling_ratios(const std::string& family,
                                      const std::string& algorithm) const;
};

// Runs every (family, size, algorithm) combination and records subproblem
// counts. Families: "path" and "balanced" and "zigzag" run against
// themselves, "comb" runs against its mirror image. Sizes are node counts
// and must satisfy the family's shape constraint (comb even, zigzag a
// multiple of four, balanced one below a power of two).
GrowthReport growth_report(const std::vector<std::string>& families,
                           const std::vector<int>& sizes,
                           const std::vector<Algo>& algorithms);

}  // namespace ted
