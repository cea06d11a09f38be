#include "sgtree/explorer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace sgtree {
namespace {

std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now().time_since_epoch())
                                        .count());
}

void check_depth(const SeedNode& start, std::uint32_t target) {
  if (target < start.genus) throw std::invalid_argument("target depth above the start node");
  if (capacity_for(target) > BitVec::max_bits) throw GenusTooLarge(target, max_supported_genus());
}

SeedNode resized(const SeedNode& n, std::size_t capacity) {
  SeedNode out = n;
  out.gap_bits = n.gap_bits.resized(capacity);
  out.seed_bits = n.seed_bits.resized(capacity);
  return out;
}

struct Frame {
  BitVec gap_bits;
  BitVec seed_bits;
  BitVec rake;
  std::uint32_t conductor = 0;
  std::uint32_t multiplicity = 0;
  std::uint32_t step = 0;      // next seed index to try
  std::uint32_t raked_to = 0;  // rake passes already applied to seed_bits
};

// One pass over the subtree, counting nodes per depth. Frames are reused
// across siblings so the rake state built for step s carries over to the
// later steps of the same parent. A frame one level above the target adds
// popcount of its row 0 and is never expanded.
std::vector<std::uint64_t> levels_dfs(const SeedNode& start, std::uint32_t target) {
  const std::size_t cap = capacity_for(target);
  const std::uint32_t depth_count = target - start.genus;
  std::vector<std::uint64_t> counts(depth_count + 1, 0);
  counts[0] = 1;
  if (depth_count == 0) return counts;

  std::vector<Frame> frames(depth_count);
  {
    Frame& f = frames[0];
    f.gap_bits = start.gap_bits.resized(cap);
    f.seed_bits = start.seed_bits.resized(cap);
    f.rake = f.gap_bits;
    f.conductor = start.conductor;
    f.multiplicity = start.multiplicity;
  }
  if (depth_count == 1) {
    counts[1] = frames[0].seed_bits.popcount_below(frames[0].multiplicity);
    return counts;
  }

  std::size_t depth = 0;
  while (true) {
    Frame& f = frames[depth];
    while (f.step < f.multiplicity && !f.seed_bits.test(f.step)) ++f.step;
    if (f.step == f.multiplicity) {
      if (depth == 0) break;
      --depth;
      ++frames[depth].step;
      continue;
    }

    for (std::uint32_t p = f.raked_to + 1; p <= f.step; ++p) {
      f.rake = f.rake.shift_up(1);
      f.seed_bits &= f.rake;
    }
    f.raked_to = f.step;

    const std::uint32_t child_c = f.conductor + f.step + 1;
    Frame& ch = frames[depth + 1];
    ch.conductor = child_c;
    ch.multiplicity =
        (f.step == 0 && f.multiplicity == f.conductor) ? child_c : f.multiplicity;
    ch.gap_bits = f.gap_bits;
    ch.gap_bits.set(child_c - 2);
    ch.seed_bits = f.seed_bits.shift_down(f.step + 1);
    ch.seed_bits |= BitVec::ones(static_cast<std::ptrdiff_t>(child_c) - 3, child_c, cap);
    ++counts[depth + 1];

    if (depth + 1 == depth_count - 1) {
      // children of this node are at the target
      counts[depth + 2] += ch.seed_bits.popcount_below(ch.multiplicity);
      ++f.step;
      continue;
    }
    ch.rake = ch.gap_bits;
    ch.step = 0;
    ch.raked_to = 0;
    ++depth;
  }
  return counts;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
  std::uint64_t t = 0;
  for (std::uint64_t x : v) t += x;
  return t;
}

}  // namespace

CountResult count_dfs(const SeedNode& start, std::uint32_t target) {
  check_depth(start, target);
  const std::uint64_t t0 = now_ns();
  const std::vector<std::uint64_t> counts = levels_dfs(start, target);
  const std::uint64_t t1 = now_ns();
  return {target, counts.back(), sum(counts), t1 - t0};
}

namespace {

std::uint64_t recursive_count(const BitVec& gap_bits, const BitVec& seed_bits, std::uint32_t c,
                              std::uint32_t g, std::uint32_t m, std::uint32_t target,
                              std::uint64_t& visited) {
  ++visited;
  if (g == target) return 1;
  std::uint64_t total = 0;
  BitVec raked = seed_bits;
  BitVec rake = gap_bits;
  std::uint32_t applied = 0;
  for (std::uint32_t step = 0; step < m; ++step) {
    if (!raked.test(step)) continue;
    for (std::uint32_t p = applied + 1; p <= step; ++p) {
      rake = rake.shift_up(1);
      raked &= rake;
    }
    applied = step;
    const std::uint32_t child_c = c + step + 1;
    const std::uint32_t child_m = (step == 0 && m == c) ? child_c : m;
    BitVec child_gaps = gap_bits;
    child_gaps.set(child_c - 2);
    BitVec child_seeds = raked.shift_down(step + 1);
    child_seeds |= BitVec::ones(static_cast<std::ptrdiff_t>(child_c) - 3, child_c,
                                child_seeds.capacity());
    total += recursive_count(child_gaps, child_seeds, child_c, g + 1, child_m, target, visited);
  }
  return total;
}

}  // namespace

CountResult count_recursive(const SeedNode& start, std::uint32_t target) {
  check_depth(start, target);
  const std::uint64_t t0 = now_ns();
  const SeedNode s = resized(start, capacity_for(target));
  std::uint64_t visited = 0;
  const std::uint64_t count = recursive_count(s.gap_bits, s.seed_bits, s.conductor, s.genus,
                                              s.multiplicity, target, visited);
  const std::uint64_t t1 = now_ns();
  return {target, count, visited, t1 - t0};
}

namespace {

std::uint64_t enumerate_rec(const SeedNode& n, std::uint32_t target,
                            const std::function<void(const SeedNode&)>& visit) {
  if (n.genus == target) {
    visit(n);
    return 1;
  }
  std::uint64_t total = 0;
  DescentState state(n);
  for (std::uint32_t step = 0; step < n.multiplicity; ++step) {
    if (n.seed_bits.test(step)) total += enumerate_rec(descend(n, step, state), target, visit);
  }
  return total;
}

std::uint64_t walk_rec(
    const SeedNode& n, std::int64_t parent, std::uint32_t step, std::uint32_t max_genus,
    std::uint64_t& next_index,
    const std::function<void(const SeedNode&, std::int64_t, std::uint32_t)>& visit) {
  const std::int64_t index = static_cast<std::int64_t>(next_index++);
  visit(n, parent, step);
  std::uint64_t total = 1;
  if (n.genus == max_genus) return total;
  DescentState state(n);
  for (std::uint32_t s = 0; s < n.multiplicity; ++s) {
    if (n.seed_bits.test(s)) total += walk_rec(descend(n, s, state), index, s, max_genus, next_index, visit);
  }
  return total;
}

}  // namespace

std::uint64_t enumerate(const SeedNode& start, std::uint32_t target,
                        const std::function<void(const SeedNode&)>& visit) {
  check_depth(start, target);
  return enumerate_rec(resized(start, capacity_for(target)), target, visit);
}

std::uint64_t walk(
    const SeedNode& start, std::uint32_t max_genus,
    const std::function<void(const SeedNode&, std::int64_t, std::uint32_t)>& visit) {
  check_depth(start, max_genus);
  std::uint64_t next_index = 0;
  return walk_rec(resized(start, capacity_for(max_genus)), -1, 0, max_genus, next_index, visit);
}

SequenceResult sequence(std::uint32_t max_genus) {
  if (capacity_for(max_genus) > BitVec::max_bits)
    throw GenusTooLarge(max_genus, max_supported_genus());
  SequenceResult out;
  const std::uint64_t t0 = now_ns();
  out.counts = levels_dfs(root(capacity_for(max_genus)), max_genus);
  out.elapsed_ns = now_ns() - t0;
  out.nodes_visited = sum(out.counts);
  for (std::uint32_t g = 0; g + 2 <= max_genus; ++g) {
    if (out.counts[g + 2] < out.counts[g + 1] + out.counts[g]) out.fibonacci_violations.push_back(g);
  }
  return out;
}

CountResult count_parallel(const SeedNode& start, std::uint32_t target, unsigned workers,
                           std::uint32_t frontier) {
  check_depth(start, target);
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  const std::uint64_t t0 = now_ns();

  const std::uint32_t cut = std::min(std::max(frontier, start.genus), target);
  std::vector<SeedNode> frontier_nodes;
  // nodes at depths start..cut, frontier included
  const std::uint64_t above = walk(start, cut, [&](const SeedNode& n, std::int64_t, std::uint32_t) {
    if (n.genus == cut) frontier_nodes.push_back(n);
  });

  if (cut == target) {
    const std::uint64_t t1 = now_ns();
    return {target, frontier_nodes.size(), above, t1 - t0};
  }

  struct Partial {
    std::uint64_t count = 0;
    std::uint64_t visited = 0;
  };
  std::vector<Partial> partials(workers);
  auto run_worker = [&](unsigned w) {
    for (std::size_t i = w; i < frontier_nodes.size(); i += workers) {
      const CountResult r = count_dfs(frontier_nodes[i], target);
      partials[w].count += r.count;
      // the frontier node itself is already counted in `above`
      partials[w].visited += r.nodes_visited - 1;
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (std::thread& t : threads) t.join();
  }

  std::uint64_t count = 0;
  std::uint64_t visited = above;
  for (const Partial& p : partials) {
    count += p.count;
    visited += p.visited;
  }
  const std::uint64_t t1 = now_ns();
  return {target, count, visited, t1 - t0};
}

}  // namespace sgtree
