#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace ordrel {

// Fixed-width dynamic bitset.  Posets, relations and upsets are all small
// (tens to a few hundred bits), so everything is kept in a short word vector
// and compared word-wise.  The <=> order is the numeric value of the bit
// string (bit i = 2^i), which is a linear extension of the subset order --
// handy for canonical sorting of upsets.
class bitset {
public:
  bitset() = default;
  explicit bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t(0);
    trim();
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  bitset& operator|=(const bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  bitset& operator&=(const bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // set difference
  bitset& operator-=(const bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend bitset operator|(bitset a, const bitset& b) { return a |= b; }
  friend bitset operator&(bitset a, const bitset& b) { return a &= b; }
  friend bitset operator-(bitset a, const bitset& b) { return a -= b; }

  bool subset_of(const bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  // index of lowest set bit; size() if none
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return n_;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::strong_ordering operator<=>(const bitset& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t k = w_.size(); k-- > 0;)
      if (auto c = w_[k] <=> o.w_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

} // namespace ordrel
