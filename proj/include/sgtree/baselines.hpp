#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sgtree/explorer.hpp"
#include "sgtree/semigroup.hpp"

namespace sgtree {

// Three self-contained tree walkers over alternative node states. They
// exist to cross-check the packed seed representation: same tree, same
// counts, different bookkeeping and failure modes.

// --- Apery set ------------------------------------------------------------
// apery[r] is the smallest member congruent to r mod multiplicity;
// apery[0] = 0. Membership is z >= apery[z % m]; removing a generator x
// bumps apery[x % m] to x + m.
struct AperyNode {
  std::uint32_t conductor = 1;
  std::uint32_t multiplicity = 1;
  std::uint32_t genus = 0;
  std::vector<std::uint32_t> apery;

  bool contains(std::uint32_t z) const { return z >= apery[z % multiplicity]; }

  friend bool operator==(const AperyNode& a, const AperyNode& b) {
    return a.conductor == b.conductor && a.multiplicity == b.multiplicity && a.genus == b.genus &&
           a.apery == b.apery;
  }
};

AperyNode apery_root();
AperyNode apery_from(const FullSemigroup& s);
bool apery_is_generator(const AperyNode& n, std::uint32_t x);
std::vector<AperyNode> apery_children(const AperyNode& n);
std::uint64_t apery_child_count(const AperyNode& n);

// --- Generator tracking ---------------------------------------------------
// One mark per value in [0, conductor + multiplicity): gap, generator, or
// member that is not a generator. Children only need marks that are
// already present plus one direct test for the single new borderline
// value.
enum class Mark : std::uint8_t { Gap = 0, Gen = 1, NonGen = 2 };

struct GenTrackNode {
  std::uint32_t conductor = 1;
  std::uint32_t multiplicity = 1;
  std::uint32_t genus = 0;
  std::vector<Mark> marks;

  friend bool operator==(const GenTrackNode& a, const GenTrackNode& b) {
    return a.conductor == b.conductor && a.multiplicity == b.multiplicity && a.genus == b.genus &&
           a.marks == b.marks;
  }
};

GenTrackNode gentrack_root();
GenTrackNode gentrack_from(const FullSemigroup& s);
std::vector<GenTrackNode> gentrack_children(const GenTrackNode& n);
std::uint64_t gentrack_child_count(const GenTrackNode& n);

// --- Decomposition numbers ------------------------------------------------
// d(z) counts the ways to write z = a + b with a <= b and both members
// (a = 0 allowed), i.e. the number of members y <= z/2 with z - y a
// member. A member z >= conductor is a generator exactly when d(z) = 1
// (only the trivial 0 + z). Kept for z in [conductor, conductor + 2m).
struct DecompNode {
  std::uint32_t conductor = 1;
  std::uint32_t multiplicity = 1;
  std::uint32_t genus = 0;
  std::vector<std::uint8_t> member;  // values [0, conductor + 2m)
  std::vector<std::uint32_t> d;      // values [conductor, conductor + 2m)

  friend bool operator==(const DecompNode& a, const DecompNode& b) {
    return a.conductor == b.conductor && a.multiplicity == b.multiplicity && a.genus == b.genus &&
           a.member == b.member && a.d == b.d;
  }
};

DecompNode decomp_root();
DecompNode decomp_from(const FullSemigroup& s);
std::vector<DecompNode> decomp_children(const DecompNode& n);
std::uint64_t decomp_child_count(const DecompNode& n);

// d(x) straight from the definition, for tests.
std::uint32_t decomp_number_bruteforce(const FullSemigroup& s, std::uint32_t x);

CountResult apery_count(std::uint32_t genus);
CountResult gentrack_count(std::uint32_t genus);
CountResult decomp_count(std::uint32_t genus);

// --- Dispatch ---------------------------------------------------------------

enum class Algorithm { seeds_dfs, seeds_recursive, apery, gentrack, decomp };

std::string_view algorithm_name(Algorithm a);      // e.g. "seeds-dfs"
std::string_view algorithm_family(Algorithm a);    // e.g. "seeds"
std::string_view algorithm_variant(Algorithm a);   // "dfs" or "recursive"
std::optional<Algorithm> parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

CountResult count_semigroups(Algorithm a, std::uint32_t genus);

}  // namespace sgtree
