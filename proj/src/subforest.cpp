#include "ted/subforest.hpp"

#include <cassert>
#include <stdexcept>

namespace ted {

namespace {

// First node at preorder rank >= p whose postorder rank is <= q. Every node
// skipped on the way is an ancestor of the answer reached through leftmost
// children, so preorder ranks along the walk are consecutive. The caller
// guarantees a qualifying node exists.
int settle_left(const TreeIndex& ix, int p, int q) {
  int u = ix.node_at_pre(p);
  while (ix.post(u) > q) {
    assert(ix.pre(u) < ix.n());
    u = ix.node_at_pre(ix.pre(u) + 1);
  }
  return u;
}

// Mirror image: first node at postorder rank <= q whose preorder rank is > a,
// reached through rightmost children with consecutive postorder ranks.
int settle_right(const TreeIndex& ix, int q, int a) {
  int u = ix.node_at_post(q);
  while (ix.pre(u) <= a) {
    assert(ix.post(u) > 1);
    u = ix.node_at_post(ix.post(u) - 1);
  }
  return u;
}

}  // namespace

Subforest Subforest::whole(const TreeIndex& ix) { return Subforest(ix, 0, 0, ix.n()); }

Subforest Subforest::none(const TreeIndex& ix) { return Subforest(ix, ix.n(), 0, 0); }

int Subforest::leftmost_root() const {
  assert(count_ > 0);
  return ix_->node_at_pre(a_ + 1);
}

int Subforest::rightmost_root() const {
  assert(count_ > 0);
  return ix_->node_at_post(ix_->n() - b_);
}

int Subforest::left_tree_size() const { return ix_->size(leftmost_root()); }

int Subforest::right_tree_size() const { return ix_->size(rightmost_root()); }

bool Subforest::is_single_tree() const { return count_ > 0 && leftmost_root() == rightmost_root(); }

bool Subforest::contains(int v) const {
  return count_ > 0 && ix_->pre(v) > a_ && ix_->post(v) <= ix_->n() - b_;
}

std::vector<int> Subforest::nodes() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int r = a_ + 1; r <= ix_->n(); ++r) {
    const int v = ix_->node_at_pre(r);
    if (ix_->post(v) <= ix_->n() - b_) out.push_back(v);
  }
  assert(static_cast<int>(out.size()) == count_);
  return out;
}

Subforest Subforest::delete_left() const {
  if (count_ == 0) throw std::invalid_argument("deletion from empty forest");
  if (count_ == 1) return none(*ix_);
  const int l = leftmost_root();
  if (ix_->size(l) > 1) {
    // The first child of l becomes the leftmost root; when l was the only
    // tree its last child becomes the rightmost root as well.
    const int b2 = is_single_tree() ? b_ + 1 : b_;
    return Subforest(*ix_, a_ + 1, b2, count_ - 1);
  }
  // l was a one-node tree, so the next root may sit deeper to the right.
  const int u = settle_left(*ix_, ix_->pre(l) + 1, ix_->n() - b_);
  return Subforest(*ix_, ix_->pre(u) - 1, b_, count_ - 1);
}

Subforest Subforest::delete_right() const {
  if (count_ == 0) throw std::invalid_argument("deletion from empty forest");
  if (count_ == 1) return none(*ix_);
  const int r = rightmost_root();
  if (ix_->size(r) > 1) {
    const int a2 = is_single_tree() ? a_ + 1 : a_;
    return Subforest(*ix_, a2, b_ + 1, count_ - 1);
  }
  const int u = settle_right(*ix_, ix_->post(r) - 1, a_);
  return Subforest(*ix_, a_, ix_->n() - ix_->post(u), count_ - 1);
}

Subforest Subforest::drop_leftmost_tree() const {
  if (count_ == 0) throw std::invalid_argument("deletion from empty forest");
  const int l = leftmost_root();
  const int rest = count_ - ix_->size(l);
  if (rest == 0) return none(*ix_);
  const int u = settle_left(*ix_, ix_->pre(l) + ix_->size(l), ix_->n() - b_);
  return Subforest(*ix_, ix_->pre(u) - 1, b_, rest);
}

Subforest Subforest::drop_rightmost_tree() const {
  if (count_ == 0) throw std::invalid_argument("deletion from empty forest");
  const int r = rightmost_root();
  const int rest = count_ - ix_->size(r);
  if (rest == 0) return none(*ix_);
  const int u = settle_right(*ix_, ix_->post(r) - ix_->size(r), a_);
  return Subforest(*ix_, a_, ix_->n() - ix_->post(u), rest);
}

Subforest subtree_subforest(const TreeIndex& ix, int v) {
  return Subforest(ix, ix.pre(v) - 1, ix.n() - ix.post(v), ix.size(v));
}

Subforest rootless_subtree(const TreeIndex& ix, int v) {
  if (ix.size(v) == 1) return Subforest::none(ix);
  return Subforest(ix, ix.pre(v), ix.n() - ix.post(v) + 1, ix.size(v) - 1);
}

}  // namespace ted
