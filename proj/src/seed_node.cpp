#include "sgtree/seed_node.hpp"

#include <cassert>

namespace sgtree {

SeedNode root(std::size_t capacity) {
  assert(capacity >= 1);
  SeedNode n;
  n.conductor = 1;
  n.genus = 0;
  n.multiplicity = 1;
  n.gap_bits = BitVec(capacity);
  n.seed_bits = BitVec(capacity);
  n.seed_bits.set(0);
  return n;
}

void DescentState::advance(std::uint32_t target) {
  assert(target >= applied_);
  for (std::uint32_t p = applied_ + 1; p <= target; ++p) {
    rake_ = rake_.shift_up(1);
    raked_ &= rake_;
  }
  applied_ = target;
}

SeedNode descend(const SeedNode& parent, std::uint32_t step, DescentState& state) {
  if (step >= parent.multiplicity || !parent.seed_bits.test(step)) throw NotASeed(step);

  const std::uint32_t child_c = parent.conductor + step + 1;
  if (child_c > parent.gap_bits.capacity())
    throw GenusTooLarge(parent.genus + 1,
                        static_cast<std::uint32_t>((parent.gap_bits.capacity() - 2) / 2));

  state.advance(step);

  SeedNode child;
  child.conductor = child_c;
  child.genus = parent.genus + 1;
  child.multiplicity =
      (step == 0 && parent.multiplicity == parent.conductor) ? child_c : parent.multiplicity;

  child.gap_bits = parent.gap_bits;
  child.gap_bits.set(child_c - 2);

  // Surviving seeds slide down past the removed element; the last three
  // positions of the child string are always fresh seeds.
  child.seed_bits = state.raked().shift_down(step + 1);
  child.seed_bits |= BitVec::ones(static_cast<std::ptrdiff_t>(child_c) - 3, child_c,
                                  child.seed_bits.capacity());
  return child;
}

SeedNode descend(const SeedNode& parent, std::uint32_t step) {
  DescentState state(parent);
  return descend(parent, step, state);
}

std::vector<std::pair<std::uint32_t, SeedNode>> children(const SeedNode& parent) {
  std::vector<std::pair<std::uint32_t, SeedNode>> out;
  DescentState state(parent);
  for (std::uint32_t step = 0; step < parent.multiplicity; ++step) {
    if (parent.seed_bits.test(step)) out.emplace_back(step, descend(parent, step, state));
  }
  return out;
}

}  // namespace sgtree
