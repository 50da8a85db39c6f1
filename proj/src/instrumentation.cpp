#include "ted/instrumentation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ted/generators.hpp"

namespace ted {

BoundCheck check_dmrw_bound(const RunStats& stats, int n, int m) {
  BoundCheck out;
  out.count = stats.subproblem_count;
  if (n <= 0 || m <= 0) {
    out.within = true;
    return out;
  }
  const unsigned long long prod =
      static_cast<unsigned long long>(n) * static_cast<unsigned long long>(m);
  using U = unsigned __int128;
  const U rhs = U{16} * prod * prod * prod;
  out.within = out.count < (1ull << 62) && U{out.count} * out.count <= rhs;
  out.stated_bound = 4.0L * std::pow(static_cast<long double>(prod), 1.5L);
  const double hi = static_cast<double>(n > m ? n : m);
  const double lo = static_cast<double>(n > m ? m : n);
  out.empirical_constant =
      static_cast<double>(out.count) / (lo * lo * hi * (1.0 + std::log2(hi / lo)));
  return out;
}

std::string GrowthReport::to_csv() const {
  std::ostringstream os;
  os << "instance,n,m,algorithm,count\n";
  for (const GrowthRow& r : rows)
    os << r.instance << ',' << r.n << ',' << r.m << ',' << r.algorithm << ','
       << r.count << '\n';
  return os.str();
}

std::vector<double> GrowthReport::doubling_ratios(
    const std::string& family, const std::string& algorithm) const {
  std::vector<const GrowthRow*> picked;
  for (const GrowthRow& r : rows) {
    if (r.algorithm != algorithm) continue;
    if (r.instance.rfind(family, 0) != 0) continue;
    // The instance id is family + digits; require the digits so "path"
    // never swallows a longer family name.
    const std::string rest = r.instance.substr(family.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      continue;
    picked.push_back(&r);
  }
  std::vector<double> out;
  for (std::size_t i = 1; i < picked.size(); ++i)
    out.push_back(static_cast<double>(picked[i]->count) /
                  static_cast<double>(picked[i - 1]->count));
  return out;
}

namespace {

std::pair<Tree, Tree> family_instance(const std::string& family, int size) {
  if (family == "path") return {gen_path(size), gen_path(size)};
  if (family == "comb") return {gen_comb(size), gen_comb_mirror(size)};
  if (family == "zigzag") return {gen_zigzag(size), gen_zigzag(size)};
  if (family == "balanced") {
    int k = 0;
    while ((2 << k) - 1 < size) ++k;
    if ((2 << k) - 1 != size)
      throw std::invalid_argument("balanced size must be one below a power of two");
    return {gen_balanced(k), gen_balanced(k)};
  }
  throw std::invalid_argument("unknown instance family");
}

}  // namespace

GrowthReport growth_report(const std::vector<std::string>& families,
                           const std::vector<int>& sizes,
                           const std::vector<Algo>& algorithms) {
  GrowthReport rep;
  const CostModel unit = unit_model();
  for (const std::string& family : families) {
    for (int size : sizes) {
      const auto [f, g] = family_instance(family, size);
      for (Algo algo : algorithms) {
        DistanceEngine e(f, g, unit);
        e.run(algo);
        const RunStats st = e.result().stats;
        rep.rows.push_back(GrowthRow{family + std::to_string(size),
                                     f.node_count(), g.node_count(),
                                     algo_name(algo), st.subproblem_count});
      }
    }
  }
  return rep;
}

}  // namespace ted
