#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace adjlab {

// Dynamic bitset with capacity fixed at construction.  Unused high bits of
// the last word are kept zero so whole-word operations stay exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }
  void clear() { for (auto& x : w_) x = 0; }

  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }
  void flip_all() {
    for (auto& x : w_) x = ~x;
    trim();
  }

  int count() const {
    int s = 0;
    for (auto x : w_) s += std::popcount(x);
    return s;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  // Set difference: this & ~o.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int count_and(const Bitset& o) const {
    int s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      s += std::popcount(w_[i] & o.w_[i]);
    return s;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }
  int find_next(int i) const {  // first set bit strictly after i
    ++i;
    if (i >= n_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t word = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (word) return int(k * 64) + std::countr_zero(word);
      if (++k == w_.size()) return -1;
      word = w_[k];
    }
  }

  template <class F>
  void for_each(F&& f) const {  // ascending indices
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t word = w_[k];
      while (word) {
        f(int(k * 64) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace adjlab
