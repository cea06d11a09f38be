#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

namespace sgtree {

// Fixed-capacity bit vector addressed by index, index 0 first. Shifts are
// named by index direction: shift_up moves content toward higher indices,
// shift_down toward lower ones. Bits at or above the capacity always read
// as zero; every operation keeps them zero. Capacity is fixed at
// construction and never grows.
//
// The limb type is configurable so that cross-limb carries can be
// exercised with small inputs (see the tests); the default is the native
// word.
template <class Limb = std::uint64_t, std::size_t MaxBits = 128>
class BasicBitVec {
  static_assert(std::is_unsigned_v<Limb>);
  static_assert(MaxBits > 0);

 public:
  static constexpr std::size_t limb_bits = std::numeric_limits<Limb>::digits;
  static constexpr std::size_t max_bits = MaxBits;
  static constexpr std::size_t limb_count = (MaxBits + limb_bits - 1) / limb_bits;

  BasicBitVec() = default;

  explicit BasicBitVec(std::size_t capacity) : capacity_(static_cast<std::uint32_t>(capacity)) {
    assert(capacity <= max_bits);
  }

  // Parses "10110"; character i becomes bit i. capacity 0 means s.size().
  static BasicBitVec from_string(std::string_view s, std::size_t capacity = 0) {
    BasicBitVec v(capacity == 0 ? s.size() : capacity);
    assert(s.size() <= v.capacity_);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') v.set(i);
    }
    return v;
  }

  std::size_t capacity() const { return capacity_; }

  bool test(std::size_t i) const {
    assert(i < capacity_);
    return (limbs_[i / limb_bits] >> (i % limb_bits)) & Limb{1};
  }

  void set(std::size_t i) {
    assert(i < capacity_);
    limbs_[i / limb_bits] = static_cast<Limb>(limbs_[i / limb_bits] | (Limb{1} << (i % limb_bits)));
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (Limb w : limbs_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  // Number of 1-bits at indices < hi.
  std::size_t popcount_below(std::size_t hi) const {
    assert(hi <= capacity_);
    std::size_t n = 0;
    const std::size_t full = hi / limb_bits;
    for (std::size_t i = 0; i < full; ++i) n += static_cast<std::size_t>(std::popcount(limbs_[i]));
    if (const std::size_t rem = hi % limb_bits; rem != 0) {
      const Limb mask = static_cast<Limb>((Limb{1} << rem) - 1);
      n += static_cast<std::size_t>(std::popcount(static_cast<Limb>(limbs_[full] & mask)));
    }
    return n;
  }

  // Result bit i = bit i-x; bits shifted past the capacity are dropped.
  BasicBitVec shift_up(std::size_t x) const {
    BasicBitVec out(capacity_);
    if (x >= capacity_) return out;
    const std::size_t q = x / limb_bits;
    const std::size_t r = x % limb_bits;
    const std::size_t n = active_limbs();
    if (r == 0) {
      for (std::size_t i = n; i-- > q;) out.limbs_[i] = limbs_[i - q];
    } else {
      for (std::size_t i = n; i-- > q;) {
        Limb v = static_cast<Limb>(limbs_[i - q] << r);
        if (i > q) v = static_cast<Limb>(v | (limbs_[i - q - 1] >> (limb_bits - r)));
        out.limbs_[i] = v;
      }
    }
    out.mask_tail();
    return out;
  }

  // Result bit i = bit i+x; the top x positions vacate to zero.
  BasicBitVec shift_down(std::size_t x) const {
    BasicBitVec out(capacity_);
    if (x >= capacity_) return out;
    const std::size_t q = x / limb_bits;
    const std::size_t r = x % limb_bits;
    const std::size_t n = active_limbs();
    if (r == 0) {
      for (std::size_t i = 0; i + q < n; ++i) out.limbs_[i] = limbs_[i + q];
    } else {
      for (std::size_t i = 0; i + q < n; ++i) {
        Limb v = static_cast<Limb>(limbs_[i + q] >> r);
        if (i + q + 1 < n) v = static_cast<Limb>(v | (limbs_[i + q + 1] << (limb_bits - r)));
        out.limbs_[i] = v;
      }
    }
    return out;
  }

  // Bits lo..hi-1 set, everything else zero. lo may be negative; it is
  // clamped to zero.
  static BasicBitVec ones(std::ptrdiff_t lo, std::size_t hi, std::size_t capacity) {
    BasicBitVec out(capacity);
    const std::size_t from = lo < 0 ? 0 : static_cast<std::size_t>(lo);
    assert(hi <= capacity);
    if (from >= hi) return out;
    const std::size_t first = from / limb_bits;
    const std::size_t last = (hi - 1) / limb_bits;
    for (std::size_t i = first; i <= last; ++i) {
      Limb mask = static_cast<Limb>(~Limb{0});
      if (i == first && from % limb_bits != 0)
        mask = static_cast<Limb>(mask & static_cast<Limb>(~((Limb{1} << (from % limb_bits)) - 1)));
      if (i == last && hi % limb_bits != 0)
        mask = static_cast<Limb>(mask & static_cast<Limb>((Limb{1} << (hi % limb_bits)) - 1));
      out.limbs_[i] = static_cast<Limb>(out.limbs_[i] | mask);
    }
    return out;
  }

  BasicBitVec& operator&=(const BasicBitVec& o) {
    for (std::size_t i = 0; i < limb_count; ++i) limbs_[i] = static_cast<Limb>(limbs_[i] & o.limbs_[i]);
    return *this;
  }

  BasicBitVec& operator|=(const BasicBitVec& o) {
    assert(o.highest_live() < capacity_ || o.popcount() == 0);
    for (std::size_t i = 0; i < limb_count; ++i) limbs_[i] = static_cast<Limb>(limbs_[i] | o.limbs_[i]);
    return *this;
  }

  friend BasicBitVec operator&(BasicBitVec a, const BasicBitVec& b) { return a &= b; }
  friend BasicBitVec operator|(BasicBitVec a, const BasicBitVec& b) { return a |= b; }

  // Equality is on bit content; two vectors with different capacities but
  // the same live bits compare equal.
  friend bool operator==(const BasicBitVec& a, const BasicBitVec& b) { return a.limbs_ == b.limbs_; }

  // Same content under a new capacity. Live bits must fit.
  BasicBitVec resized(std::size_t new_capacity) const {
    BasicBitVec out(new_capacity);
    out.limbs_ = limbs_;
    out.mask_tail();
    assert(out.popcount() == popcount());
    return out;
  }

  // First n bits in index order, leftmost character = index 0.
  std::string to_string(std::size_t n) const {
    assert(n <= capacity_);
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t active_limbs() const { return (capacity_ + limb_bits - 1) / limb_bits; }

  void mask_tail() {
    const std::size_t n = active_limbs();
    for (std::size_t i = n; i < limb_count; ++i) limbs_[i] = 0;
    if (const std::size_t rem = capacity_ % limb_bits; rem != 0 && n > 0)
      limbs_[n - 1] = static_cast<Limb>(limbs_[n - 1] & ((Limb{1} << rem) - 1));
  }

  std::size_t highest_live() const {
    for (std::size_t i = limb_count; i-- > 0;)
      if (limbs_[i] != 0) return i * limb_bits + (limb_bits - 1 - static_cast<std::size_t>(std::countl_zero(limbs_[i])));
    return 0;
  }

  std::array<Limb, limb_count> limbs_{};
  std::uint32_t capacity_ = 0;
};

using BitVec = BasicBitVec<>;

}  // namespace sgtree
