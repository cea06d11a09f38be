#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sgtree/explorer.hpp"
#include "sgtree/semigroup.hpp"

using namespace sgtree;

namespace {

FullSemigroup example_a() {
  return FullSemigroup::from_gaps({fixtures::kExampleGapsA.begin(), fixtures::kExampleGapsA.end()});
}

std::uint64_t fixture_total(std::uint32_t to) {
  std::uint64_t t = 0;
  for (std::uint32_t g = 0; g <= to; ++g) t += fixtures::kCountsByGenus[g];
  return t;
}

}  // namespace

TEST_CASE("iterative and recursive counts match the frozen sequence") {
  for (std::uint32_t g = 0; g <= 12; ++g) {
    const CountResult it = count_dfs(root(capacity_for(g)), g);
    CHECK(it.count == fixtures::kCountsByGenus[g]);
    CHECK(it.genus == g);
    CHECK(it.nodes_visited == fixture_total(g));
    const CountResult rec = count_recursive(root(capacity_for(g)), g);
    CHECK(rec.count == it.count);
    CHECK(rec.nodes_visited == it.nodes_visited);
  }
}

TEST_CASE("counting from an interior start node") {
  const SeedNode start = encode_node(example_a());
  for (std::uint32_t g = 6; g <= 11; ++g) {
    const std::uint64_t expected = oracle::count(example_a(), g);
    CHECK(count_dfs(start, g).count == expected);
    CHECK(count_recursive(start, g).count == expected);
  }
}

TEST_CASE("depth checks") {
  const SeedNode start = encode_node(example_a());  // genus 6
  CHECK_THROWS_AS(count_dfs(start, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_dfs(root(2), max_supported_genus() + 1), GenusTooLarge);
  CHECK_THROWS_AS(sequence(max_supported_genus() + 1), GenusTooLarge);
  CHECK(max_supported_genus() == (BitVec::max_bits - 2) / 2);
}

TEST_CASE("enumerate yields the oracle's nodes in the oracle's order") {
  for (std::uint32_t g = 0; g <= 6; ++g) {
    const std::vector<FullSemigroup> expected = oracle::level(g);
    std::vector<FullSemigroup> got;
    const std::uint64_t n =
        enumerate(root(capacity_for(g)), g, [&](const SeedNode& node) { got.push_back(decode_node(node)); });
    CHECK(n == expected.size());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("walk visits the whole subtree with consistent edges") {
  struct Entry {
    SeedNode node;
    std::int64_t parent;
    std::uint32_t step;
  };
  std::vector<Entry> entries;
  const std::uint64_t n = walk(root(capacity_for(6)), 6,
                               [&](const SeedNode& node, std::int64_t parent, std::uint32_t step) {
                                 entries.push_back({node, parent, step});
                               });
  CHECK(n == fixture_total(6));
  REQUIRE(entries.size() == n);
  CHECK(entries[0].parent == -1);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    REQUIRE(e.parent >= 0);
    REQUIRE(static_cast<std::size_t>(e.parent) < i);  // pre-order
    CHECK(e.node == descend(entries[static_cast<std::size_t>(e.parent)].node, e.step));
  }
}

TEST_CASE("walk order through depth 5 is the golden node list") {
  std::vector<std::pair<std::string, std::string>> got;
  walk(root(capacity_for(5)), 5, [&](const SeedNode& n, std::int64_t, std::uint32_t) {
    got.emplace_back(n.gap_string(), n.seed_string());
  });
  REQUIRE(got.size() == fixtures::kTreeStrings.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].first == fixtures::kTreeStrings[i].first);
    CHECK(got[i].second == fixtures::kTreeStrings[i].second);
  }
}

TEST_CASE("sequence counts every level in one pass") {
  const SequenceResult r = sequence(12);
  REQUIRE(r.counts.size() == 13);
  for (std::uint32_t g = 0; g <= 12; ++g) CHECK(r.counts[g] == fixtures::kCountsByGenus[g]);
  CHECK(r.fibonacci_violations.empty());
  CHECK(r.nodes_visited == fixture_total(12));
}

TEST_CASE("parallel counting is deterministic and exact") {
  const SeedNode start = root(capacity_for(14));
  const std::uint64_t expected = fixtures::kCountsByGenus[14];
  const std::uint64_t expected_visited = count_dfs(start, 14).nodes_visited;
  for (unsigned workers : {1u, 2u, 4u, 8u}) {
    for (std::uint32_t frontier : {0u, 4u, 8u, 14u, 20u}) {
      const CountResult r = count_parallel(start, 14, workers, frontier);
      CHECK(r.count == expected);
      CHECK(r.nodes_visited == expected_visited);
    }
  }
  CHECK_THROWS_AS(count_parallel(start, 14, 0, 4), std::invalid_argument);
}

TEST_CASE("parallel counting from an interior node") {
  const SeedNode start = encode_node(example_a());
  const std::uint64_t expected = oracle::count(example_a(), 12);
  CHECK(count_parallel(start, 12, 3, 9).count == expected);
  CHECK(count_parallel(start, 12, 2, 2).count == expected);  // frontier above the start clamps
}
