// Nonnegative integer edit costs. Deletion cost is per label and covers
// insertion as well, since inserting into one tree is deleting from the
// other. Relabel cost falls back to an equal/unequal default pair unless a
// specific label pair is overridden.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ted {

struct CostTable {
  std::optional<long long> del_default;
  std::optional<long long> rel_default_eq;
  std::optional<long long> rel_default_neq;
  std::map<std::string, long long> del_overrides;
  std::map<std::pair<std::string, std::string>, long long> rel_overrides;
};

class CostModel {
 public:
  long long del(const std::string& label) const {
    auto it = del_overrides_.find(label);
    return it == del_overrides_.end() ? del_default_ : it->second;
  }

  long long rel(const std::string& from, const std::string& to) const {
    if (!rel_overrides_.empty()) {
      auto it = rel_overrides_.find({from, to});
      if (it != rel_overrides_.end()) return it->second;
    }
    return from == to ? rel_default_eq_ : rel_default_neq_;
  }

  // True when rel(x, y) == rel(y, x) held for every override at build time.
  bool declared_symmetric() const { return declared_symmetric_; }
  // True when rel(x, x) == 0 for every label.
  bool zero_diagonal() const { return zero_diagonal_; }

  friend CostModel unit_model();
  friend CostModel from_table(const CostTable& table);

 private:
  long long del_default_ = 1;
  long long rel_default_eq_ = 0;
  long long rel_default_neq_ = 1;
  std::map<std::string, long long> del_overrides_;
  std::map<std::pair<std::string, std::string>, long long> rel_overrides_;
  bool declared_symmetric_ = true;
  bool zero_diagonal_ = true;
};

// del = 1 everywhere, rel = 0 on equal labels and 1 otherwise.
CostModel unit_model();

// Throws std::invalid_argument("incomplete cost table") when a default is
// missing and std::invalid_argument("negative cost") on any negative entry.
CostModel from_table(const CostTable& table);

}  // namespace ted
