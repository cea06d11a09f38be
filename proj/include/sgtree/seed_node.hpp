#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgtree/bitvec.hpp"
#include "sgtree/errors.hpp"

namespace sgtree {

// One tree node in packed form. The gap string G has bit l set iff l+1 is
// a gap, so it holds conductor bits and its top bit is always 0. The seed
// string S is the seeds table with its rows laid end to end: row i starts
// at offset lambda_i, and bit lambda_i + j is set iff conductor + j is an
// order-i seed. Both strings live in the first `conductor` bits of their
// vectors; everything above is zero.
struct SeedNode {
  std::uint32_t conductor = 1;
  std::uint32_t genus = 0;
  std::uint32_t multiplicity = 1;
  BitVec gap_bits;
  BitVec seed_bits;

  std::uint32_t k() const { return conductor - genus; }
  std::string gap_string() const { return gap_bits.to_string(conductor); }
  std::string seed_string() const { return seed_bits.to_string(conductor); }

  friend bool operator==(const SeedNode& a, const SeedNode& b) {
    return a.conductor == b.conductor && a.genus == b.genus && a.multiplicity == b.multiplicity &&
           a.gap_bits == b.gap_bits && a.seed_bits == b.seed_bits;
  }
};

// The semigroup of all nonnegative integers: c = 1, m = 1, G = "0", S = "1".
SeedNode root(std::size_t capacity);

// Raking state shared by the children of one parent. Children must be
// produced in ascending step order; each advance(t) applies rake passes
// t_prev+1 .. t, where one pass is rake = shift_up(rake, 1) followed by
// S &= rake. Pass p clears exactly the seeds that p more gaps would
// invalidate, so after advancing to t the low bits of S describe the
// step-t child.
class DescentState {
 public:
  explicit DescentState(const SeedNode& parent)
      : rake_(parent.gap_bits), raked_(parent.seed_bits) {}

  void advance(std::uint32_t target);

  const BitVec& raked() const { return raked_; }
  std::uint32_t applied() const { return applied_; }

 private:
  BitVec rake_;
  BitVec raked_;
  std::uint32_t applied_ = 0;
};

// Child of `parent` along seed index `step` (the child conductor becomes
// conductor + step + 1). Throws NotASeed unless 0 <= step < multiplicity
// and S bit `step` is set; throws GenusTooLarge if the child no longer
// fits the vectors' capacity. The state must come from the same parent
// and must not have advanced past `step`.
SeedNode descend(const SeedNode& parent, std::uint32_t step, DescentState& state);

// One-off variant; builds a fresh DescentState internally.
SeedNode descend(const SeedNode& parent, std::uint32_t step);

// All children with their step indices, ascending.
std::vector<std::pair<std::uint32_t, SeedNode>> children(const SeedNode& parent);

}  // namespace sgtree
