#include "ted/cost_model.hpp"

#include <stdexcept>

namespace ted {

CostModel unit_model() { return CostModel{}; }

CostModel from_table(const CostTable& table) {
  if (!table.del_default || !table.rel_default_eq || !table.rel_default_neq)
    throw std::invalid_argument("incomplete cost table");
  CostModel m;
  m.del_default_ = *table.del_default;
  m.rel_default_eq_ = *table.rel_default_eq;
  m.rel_default_neq_ = *table.rel_default_neq;
  m.del_overrides_ = table.del_overrides;
  m.rel_overrides_ = table.rel_overrides;
  if (m.del_default_ < 0 || m.rel_default_eq_ < 0 || m.rel_default_neq_ < 0)
    throw std::invalid_argument("negative cost");
  for (const auto& [label, c] : m.del_overrides_)
    if (c < 0) throw std::invalid_argument("negative cost");
  for (const auto& [pair, c] : m.rel_overrides_)
    if (c < 0) throw std::invalid_argument("negative cost");

  m.zero_diagonal_ = m.rel_default_eq_ == 0;
  m.declared_symmetric_ = true;
  for (const auto& [pair, c] : m.rel_overrides_) {
    if (pair.first == pair.second && c != 0) m.zero_diagonal_ = false;
    if (m.rel(pair.second, pair.first) != c) m.declared_symmetric_ = false;
  }
  return m;
}

}  // namespace ted
