#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgtree/seed_node.hpp"

namespace sgtree {

struct CountResult {
  std::uint32_t genus = 0;          // target depth
  std::uint64_t count = 0;          // nodes at exactly that depth
  std::uint64_t nodes_visited = 0;  // nodes at all depths from the start down to it
  std::uint64_t elapsed_ns = 0;
};

struct SequenceResult {
  // counts[g] = number of nodes at depth g, for g = 0 .. max_genus.
  std::vector<std::uint64_t> counts;
  // g values with counts[g+2] < counts[g+1] + counts[g]; expected empty.
  std::vector<std::uint32_t> fibonacci_violations;
  std::uint64_t nodes_visited = 0;
  std::uint64_t elapsed_ns = 0;
};

// Vector capacity needed to reach depth `target`: the deepest conductor is
// 2*target, and descending sets bit conductor+1 first.
inline std::size_t capacity_for(std::uint32_t target) {
  return 2 * static_cast<std::size_t>(target) + 2;
}

// Largest depth the compiled vector width supports.
constexpr std::uint32_t max_supported_genus() {
  return static_cast<std::uint32_t>((BitVec::max_bits - 2) / 2);
}

// Iterative depth-first count of the subtree under `start`, one reusable
// frame per depth. Children of one parent share raking work, and a node
// one level above the target contributes popcount of its row 0 instead of
// materialized children. Throws GenusTooLarge past max_supported_genus().
CountResult count_dfs(const SeedNode& start, std::uint32_t target);

// Same tree, plain recursion; exists as an independent cross-check.
CountResult count_recursive(const SeedNode& start, std::uint32_t target);

// count_dfs split across threads: the subtrees hanging off the depth
// `frontier` nodes are dealt round robin to `workers` threads and the
// partial sums are combined in worker order, so the result does not
// depend on scheduling.
CountResult count_parallel(const SeedNode& start, std::uint32_t target, unsigned workers,
                           std::uint32_t frontier);

// Visit every node at exactly depth `target`, in ascending-step DFS
// order. Returns the number visited.
std::uint64_t enumerate(const SeedNode& start, std::uint32_t target,
                        const std::function<void(const SeedNode&)>& visit);

// Pre-order walk of all depths start .. max_genus. `parent` is the
// pre-order index of the parent (-1 for the start node itself), `step`
// the seed index the edge descended along (0 for the start node). Returns
// the number of nodes walked.
std::uint64_t walk(
    const SeedNode& start, std::uint32_t max_genus,
    const std::function<void(const SeedNode&, std::int64_t parent, std::uint32_t step)>& visit);

// Per-depth counts 0 .. max_genus from a single deep traversal.
SequenceResult sequence(std::uint32_t max_genus);

}  // namespace sgtree
