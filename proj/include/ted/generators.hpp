// Deterministic instance generators: the adversarial shape families used to
// stress subproblem growth, plus paths and seeded random trees.
#pragma once

#include <cstdint>

#include "ted/tree.hpp"

namespace ted {

// Unary chain of n nodes labeled "a".
Tree gen_path(int n);

// Left-spine comb with n nodes, n even: n/2 internal nodes in a chain, each
// with one leaf as its right child (the bottom one has only the leaf). The
// internal node i-th from the bottom roots a subtree of exactly 2i nodes.
Tree gen_comb(int n);
// The same comb mirrored: the leaf is the left child, the spine goes right.
Tree gen_comb_mirror(int n);

// Complete binary tree of depth k, with 2^(k+1) - 1 nodes.
Tree gen_balanced(int k);

// Zigzag chain of m/4 four-node units, m divisible by 4. Each unit root has a
// one-leaf right subtree and a left child; the left child has a leaf on its
// left and the next unit's root on its right (the deepest unit omits it).
// Unit-root subtree sizes are exactly 4, 8, ..., m.
Tree gen_zigzag(int m);

// Random attachment with fanout capped at max_children; same seed, same tree.
// Labels are drawn from a lowercase alphabet of the given size.
Tree gen_random(int n, std::uint64_t seed, int max_children, int alphabet = 3);

}  // namespace ted
