// A strategy picks, for every subforest pair, which end the recursion
// consumes next. It must be a pure function of the pair within one run.
#pragma once

#include <cstdint>
#include <functional>

#include "ted/subforest.hpp"

namespace ted {

enum class Direction { left, right };

using Strategy = std::function<Direction(const Subforest& f, const Subforest& g)>;

// Always the rightmost root.
Strategy rightmost_strategy();

// Consume the smaller end tree of the driving side first; ties go left.
// The driving side should be the initially larger tree.
Strategy klein_strategy(bool g_drives);

// Deterministic coin flip per (seed, subforest pair); exercises the claim
// that the generic solver is exact under any direction choice.
Strategy random_strategy(std::uint64_t seed);

}  // namespace ted
