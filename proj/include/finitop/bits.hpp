#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace finitop {

/// Fixed-universe dynamic bitset; the currency for point sets of a FinSpace.
/// All binary operations require equal universe sizes.
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_(words(n), 0) {}

  static Bits full(int n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  static Bits of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  /// First set bit, or -1.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }

  /// Next set bit strictly after i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64) + __builtin_ctzll(w);
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  bool contains(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a.subtract(b); }

  Bits complement() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
  }

  const std::vector<uint64_t>& raw() const { return w_; }

private:
  static size_t words(int n) { return size_t(n + 63) / 64; }
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (~uint64_t{0}) >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// Point sets of a FinSpace are plain bitsets over its carrier.
using PointSet = Bits;

}  // namespace finitop
