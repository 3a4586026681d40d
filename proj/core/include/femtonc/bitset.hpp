#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace femtonc {

// Growable bitset with word-level set operations. std::bitset needs a
// compile-time size and std::vector<bool> hides the words.
class DynamicBitset {
public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all()
  {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }
  void clear()
  {
    for (auto& x : w_) x = 0;
  }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const
  {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  DynamicBitset& operator&=(const DynamicBitset& o)
  {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& o)
  {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  DynamicBitset& subtract(const DynamicBitset& o)
  {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  void flip()
  {
    for (auto& x : w_) x = ~x;
    trim();
  }

  std::size_t and_count(const DynamicBitset& o) const
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool intersects(const DynamicBitset& o) const
  {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // first set bit at or after i, or size() if none
  std::size_t next(std::size_t i) const
  {
    if (i >= n_) return n_;
    std::size_t wi = i >> 6;
    std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return (wi << 6) + std::countr_zero(x);
      if (++wi >= w_.size()) return n_;
      x = w_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const
  {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        f((wi << 6) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  bool operator==(const DynamicBitset& o) const = default;

private:
  void trim()
  {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    if (n_ == 0) w_.clear();
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace femtonc
