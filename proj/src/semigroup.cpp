#include "sgtree/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sgtree {
namespace {

// Membership in the semigroup minus its first `order` positive elements.
// Dropping lambda_1 .. lambda_order leaves 0 and everything at or above
// lambda_{order+1}.
bool tail_contains(const FullSemigroup& s, std::uint32_t order, std::uint32_t z) {
  if (z == 0) return true;
  return s.contains(z) && z >= s.lambda(order + 1);
}

// Does z generate the semigroup minus its first `order` positive
// elements, i.e. is it a member but not a sum of two nonzero members?
bool tail_generates(const FullSemigroup& s, std::uint32_t order, std::uint32_t z) {
  if (!tail_contains(s, order, z)) return false;
  for (std::uint32_t a = s.lambda(order + 1); 2 * a <= z; ++a) {
    if (tail_contains(s, order, a) && tail_contains(s, order, z - a)) return false;
  }
  return true;
}

}  // namespace

FullSemigroup FullSemigroup::from_gaps(std::vector<std::uint32_t> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() == 0) throw std::invalid_argument("0 cannot be a gap");

  FullSemigroup s;
  s.gaps_ = std::move(gaps);
  s.conductor_ = s.gaps_.empty() ? 1 : s.gaps_.back() + 1;

  s.multiplicity_ = 1;
  while (std::binary_search(s.gaps_.begin(), s.gaps_.end(), s.multiplicity_)) ++s.multiplicity_;

  const std::uint32_t window = s.conductor_ + 2 * s.multiplicity_ + 1;
  s.member_.assign(window, 1);
  for (std::uint32_t gap : s.gaps_) s.member_[gap] = 0;

  for (std::uint32_t i = 0; i < window; ++i) {
    if (s.member_[i]) s.lambda_.push_back(i);
  }
  assert(s.lambda_[s.k()] == s.conductor_);

  // Closure: the sum of two nonzero members below the conductor must not
  // land on a gap.
  for (std::uint32_t a = s.multiplicity_; 2 * a < s.conductor_; ++a) {
    if (!s.member_[a]) continue;
    for (std::uint32_t b = a; a + b < s.conductor_; ++b) {
      if (s.member_[b] && !s.member_[a + b]) throw ClosureViolation(a, b);
    }
  }
  return s;
}

std::vector<std::uint32_t> FullSemigroup::generators() const {
  std::vector<std::uint32_t> gens;
  const std::uint32_t limit = conductor_ + multiplicity_;
  for (std::uint32_t i = 1; lambda_[i] < limit; ++i) {
    if (tail_generates(*this, 0, lambda_[i])) gens.push_back(lambda_[i]);
  }
  return gens;
}

SeedsTable seeds_table_bruteforce(const FullSemigroup& s) {
  SeedsTable table;
  const std::uint32_t k = s.k();
  table.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t row_len = s.lambda(i + 1) - s.lambda(i);
    std::vector<std::uint8_t> row(row_len);
    for (std::uint32_t j = 0; j < row_len; ++j)
      row[j] = tail_generates(s, i, s.conductor() + j + s.lambda(i)) ? 1 : 0;
    table.push_back(std::move(row));
  }
  return table;
}

SeedNode encode_node(const FullSemigroup& s, std::size_t capacity) {
  if (capacity == 0) capacity = 2 * (static_cast<std::size_t>(s.genus()) + 1) + 2;
  assert(capacity >= s.conductor());

  SeedNode n;
  n.conductor = s.conductor();
  n.genus = s.genus();
  n.multiplicity = s.multiplicity();
  n.gap_bits = BitVec(capacity);
  for (std::uint32_t gap : s.gaps()) n.gap_bits.set(gap - 1);

  n.seed_bits = BitVec(capacity);
  std::size_t offset = 0;
  for (const auto& row : seeds_table_bruteforce(s)) {
    for (std::uint8_t bit : row) {
      if (bit) n.seed_bits.set(offset);
      ++offset;
    }
  }
  assert(offset == s.conductor());
  return n;
}

namespace {

void check_shape(const SeedNode& n) {
  if (n.conductor < 1 || n.gap_bits.capacity() < n.conductor)
    throw MalformedNode("conductor out of range");
  if (n.gap_bits.test(n.conductor - 1)) throw MalformedNode("gap bit set at conductor - 1");
  if (n.gap_bits.popcount() != n.gap_bits.popcount_below(n.conductor))
    throw MalformedNode("gap bits beyond the conductor");
  if (n.gap_bits.popcount() != n.genus) throw MalformedNode("gap count differs from genus");
}

}  // namespace

FullSemigroup decode_node(const SeedNode& n) {
  check_shape(n);
  std::vector<std::uint32_t> gaps;
  gaps.reserve(n.genus);
  for (std::uint32_t l = 0; l < n.conductor; ++l) {
    if (n.gap_bits.test(l)) gaps.push_back(l + 1);
  }
  return FullSemigroup::from_gaps(std::move(gaps));
}

SeedsTable split_table(const SeedNode& n) {
  check_shape(n);
  SeedsTable table;
  std::uint32_t row_start = 0;
  for (std::uint32_t z = 1; z <= n.conductor; ++z) {
    if (n.gap_bits.test(z - 1)) continue;  // z is a gap, not a row boundary
    std::vector<std::uint8_t> row;
    row.reserve(z - row_start);
    for (std::uint32_t pos = row_start; pos < z; ++pos)
      row.push_back(n.seed_bits.test(pos) ? 1 : 0);
    table.push_back(std::move(row));
    row_start = z;
  }
  assert(table.size() == n.k());
  return table;
}

nlohmann::json describe(const FullSemigroup& s) {
  nlohmann::json j;
  j["gaps"] = s.gaps();
  j["conductor"] = s.conductor();
  j["genus"] = s.genus();
  j["multiplicity"] = s.multiplicity();
  j["generators"] = s.generators();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : seeds_table_bruteforce(s)) rows.push_back(row);
  j["seeds_table"] = rows;
  return j;
}

}  // namespace sgtree
