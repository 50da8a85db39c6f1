#include "ted/strategy.hpp"

namespace ted {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Strategy rightmost_strategy() {
  return [](const Subforest&, const Subforest&) { return Direction::right; };
}

Strategy klein_strategy(bool g_drives) {
  return [g_drives](const Subforest& f, const Subforest& g) {
    const Subforest& d = g_drives ? g : f;
    return d.left_tree_size() <= d.right_tree_size() ? Direction::left
                                                     : Direction::right;
  };
}

Strategy random_strategy(std::uint64_t seed) {
  return [seed](const Subforest& f, const Subforest& g) {
    std::uint64_t h = mix64(seed ^ mix64(f.key())) ^ mix64(g.key() + 0x517cc1b727220a95ull);
    return (h & 1) ? Direction::left : Direction::right;
  };
}

}  // namespace ted
