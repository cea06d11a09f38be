#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sgtree/baselines.hpp"

using namespace sgtree;

namespace {

FullSemigroup example_a() {
  return FullSemigroup::from_gaps({fixtures::kExampleGapsA.begin(), fixtures::kExampleGapsA.end()});
}

}  // namespace

TEST_CASE("roots agree with the explicit form of the trivial semigroup") {
  CHECK(apery_root() == apery_from(FullSemigroup::trivial()));
  CHECK(gentrack_root() == gentrack_from(FullSemigroup::trivial()));
  CHECK(decomp_root() == decomp_from(FullSemigroup::trivial()));
}

TEST_CASE("apery set of the worked example") {
  const AperyNode n = apery_from(example_a());
  CHECK(n.apery == std::vector<std::uint32_t>{0, 11, 12, 8, 9});
  CHECK(n.conductor == 8);
  CHECK(n.multiplicity == 5);
  CHECK(n.genus == 6);
  CHECK(apery_from(FullSemigroup::from_gaps({1})).apery == std::vector<std::uint32_t>{0, 3});
}

TEST_CASE("apery generator test against the definition") {
  for (std::uint32_t genus = 0; genus <= 7; ++genus) {
    for (const FullSemigroup& s : oracle::level(genus)) {
      const AperyNode n = apery_from(s);
      const std::vector<std::uint32_t> gens = s.generators();
      for (std::uint32_t x = s.conductor(); x < s.conductor() + s.multiplicity(); ++x) {
        const bool expected = std::find(gens.begin(), gens.end(), x) != gens.end();
        CHECK(apery_is_generator(n, x) == expected);
      }
    }
  }
}

TEST_CASE("apery genus bookkeeping matches the floor-sum formula") {
  for (const FullSemigroup& s : oracle::level(6)) {
    const AperyNode n = apery_from(s);
    std::uint64_t total = 0;
    for (std::uint32_t r = 1; r < n.multiplicity; ++r) total += n.apery[r] / n.multiplicity;
    CHECK(total == n.genus);
  }
}

TEST_CASE("incremental children equal from-scratch nodes for all three") {
  for (std::uint32_t genus = 0; genus <= 7; ++genus) {
    for (const FullSemigroup& s : oracle::level(genus)) {
      const std::vector<FullSemigroup> expected = oracle::children(s);

      const std::vector<AperyNode> ac = apery_children(apery_from(s));
      REQUIRE(ac.size() == expected.size());
      for (std::size_t i = 0; i < ac.size(); ++i) CHECK(ac[i] == apery_from(expected[i]));
      CHECK(apery_child_count(apery_from(s)) == expected.size());

      const std::vector<GenTrackNode> gc = gentrack_children(gentrack_from(s));
      REQUIRE(gc.size() == expected.size());
      for (std::size_t i = 0; i < gc.size(); ++i) CHECK(gc[i] == gentrack_from(expected[i]));
      CHECK(gentrack_child_count(gentrack_from(s)) == expected.size());

      const std::vector<DecompNode> dc = decomp_children(decomp_from(s));
      REQUIRE(dc.size() == expected.size());
      for (std::size_t i = 0; i < dc.size(); ++i) CHECK(dc[i] == decomp_from(expected[i]));
      CHECK(decomp_child_count(decomp_from(s)) == expected.size());
    }
  }
}

TEST_CASE("decomposition numbers from the definition") {
  CHECK(decomp_number_bruteforce(FullSemigroup::trivial(), 4) == 3);
  const FullSemigroup ord3 = FullSemigroup::from_gaps({1, 2});
  CHECK(decomp_number_bruteforce(ord3, 3) == 1);
  CHECK(decomp_number_bruteforce(ord3, 6) == 2);
  CHECK(decomp_number_bruteforce(ord3, 8) == 3);
  CHECK(decomp_number_bruteforce(FullSemigroup::from_gaps({1, 2, 3}), 2) == 0);

  for (const FullSemigroup& s : oracle::level(6)) {
    const DecompNode n = decomp_from(s);
    for (std::uint32_t z = n.conductor; z < n.conductor + 2 * n.multiplicity; ++z)
      CHECK(n.d[z - n.conductor] == decomp_number_bruteforce(s, z));
  }
}

TEST_CASE("all five counters reproduce the frozen sequence") {
  for (std::uint32_t g = 0; g <= 11; ++g) {
    for (Algorithm a : all_algorithms()) {
      const CountResult r = count_semigroups(a, g);
      CHECK(r.count == fixtures::kCountsByGenus[g]);
      CHECK(r.genus == g);
      CHECK(r.nodes_visited >= r.count);
    }
  }
}

TEST_CASE("algorithm names") {
  CHECK(algorithm_name(Algorithm::seeds_dfs) == "seeds-dfs");
  CHECK(algorithm_family(Algorithm::seeds_recursive) == "seeds");
  CHECK(algorithm_variant(Algorithm::seeds_recursive) == "recursive");
  CHECK(algorithm_variant(Algorithm::gentrack) == "dfs");
  CHECK(all_algorithms().size() == 5);
  for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(algorithm_name(a)) == a);
  CHECK(!parse_algorithm("divination"));
}
