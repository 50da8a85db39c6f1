// Open-addressing hash map from 128-bit keys to 64-bit costs.
// No deletion. The all-ones key is reserved as the empty slot marker and
// never occurs as a real key (real keys pack two forest encodings whose
// high halves stay far below 2^32).
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ted::detail {

using Key128 = unsigned __int128;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class SubproblemMap {
 public:
  SubproblemMap() { rehash(1024); }

  long long* find(Key128 k) {
    std::size_t i = slot(k);
    while (true) {
      if (keys_[i] == k) return &vals_[i];
      if (keys_[i] == kEmpty) return nullptr;
      i = (i + 1) & mask_;
    }
  }

  const long long* find(Key128 k) const {
    return const_cast<SubproblemMap*>(this)->find(k);
  }

  // k must not be present.
  void insert(Key128 k, long long v) {
    if ((size_ + 1) * 10 >= capacity() * 7) rehash(capacity() * 2);
    std::size_t i = slot(k);
    while (keys_[i] != kEmpty) i = (i + 1) & mask_;
    keys_[i] = k;
    vals_[i] = v;
    ++size_;
  }

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return keys_.size(); }

  void clear() {
    keys_.assign(keys_.size(), kEmpty);
    size_ = 0;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) fn(keys_[i], vals_[i]);
  }

 private:
  static constexpr Key128 kEmpty = ~Key128{0};

  std::size_t slot(Key128 k) const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(k) ^
                            mix64(static_cast<std::uint64_t>(k >> 64)));
    return static_cast<std::size_t>(h) & mask_;
  }

  void rehash(std::size_t new_cap) {
    std::vector<Key128> old_keys = std::move(keys_);
    std::vector<long long> old_vals = std::move(vals_);
    keys_.assign(new_cap, kEmpty);
    vals_.assign(new_cap, 0);
    mask_ = new_cap - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      std::size_t j = slot(old_keys[i]);
      while (keys_[j] != kEmpty) j = (j + 1) & mask_;
      keys_[j] = old_keys[i];
      vals_[j] = old_vals[i];
    }
  }

  std::vector<Key128> keys_;
  std::vector<long long> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace ted::detail
