#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "sgtree/errors.hpp"
#include "sgtree/seed_node.hpp"

namespace sgtree {

// Seeds table, one row per order 0 .. k-1. Row i has lambda_{i+1} -
// lambda_i entries; entry (i, j) is 1 iff conductor + j is an order-i
// seed. The row lengths sum to the conductor.
using SeedsTable = std::vector<std::vector<std::uint8_t>>;

// A numerical semigroup held explicitly: the sorted gap list plus a
// membership table wide enough (up to conductor + 2*multiplicity) for
// every sum probe the queries below make. Values past the table are
// members by definition of the conductor.
class FullSemigroup {
 public:
  // Validates that the complement of `gaps` is closed under addition;
  // throws ClosureViolation with a witness pair otherwise. Gaps may be
  // unsorted but must be positive.
  static FullSemigroup from_gaps(std::vector<std::uint32_t> gaps);

  // {0, 1, 2, ...}: no gaps, conductor 1 by convention.
  static FullSemigroup trivial() { return from_gaps({}); }

  std::uint32_t conductor() const { return conductor_; }
  std::uint32_t genus() const { return static_cast<std::uint32_t>(gaps_.size()); }
  std::uint32_t multiplicity() const { return multiplicity_; }
  std::uint32_t k() const { return conductor_ - genus(); }
  bool is_ordinary() const { return conductor_ == multiplicity_; }

  bool contains(std::uint32_t z) const {
    return z >= member_.size() ? true : member_[z] != 0;
  }

  // i-th smallest member; lambda(0) = 0, lambda(k()) = conductor.
  std::uint32_t lambda(std::uint32_t i) const { return lambda_[i]; }

  const std::vector<std::uint32_t>& gaps() const { return gaps_; }

  // Minimal generating set, ascending. Every generator is < conductor +
  // multiplicity.
  std::vector<std::uint32_t> generators() const;

  friend bool operator==(const FullSemigroup& a, const FullSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  FullSemigroup() = default;

  std::vector<std::uint32_t> gaps_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint32_t> lambda_;
  std::uint32_t conductor_ = 1;
  std::uint32_t multiplicity_ = 1;
};

// Seeds table straight from the definition: entry (i, j) answers whether
// conductor + j + lambda_i generates the semigroup minus its first i
// positive elements. Quadratic and oblivious to the descent machinery on
// purpose; it is the reference the packed form is checked against.
SeedsTable seeds_table_bruteforce(const FullSemigroup& s);

// Packed node for s. capacity 0 picks the smallest size that still
// allows one descent (2 * (genus + 1) + 2 bits).
SeedNode encode_node(const FullSemigroup& s, std::size_t capacity = 0);

// Inverse of encode_node. Throws MalformedNode when the gap string
// contradicts the scalar fields (wrong bit count, bit conductor-1 set, or
// live bits at or above the conductor).
FullSemigroup decode_node(const SeedNode& n);

// Rows of n's seed string, split at the member positions its gap string
// implies. Performs the same shape checks as decode_node.
SeedsTable split_table(const SeedNode& n);

// {"gaps", "conductor", "genus", "multiplicity", "generators",
//  "seeds_table"} with the table as rows of 0/1.
nlohmann::json describe(const FullSemigroup& s);

}  // namespace sgtree
