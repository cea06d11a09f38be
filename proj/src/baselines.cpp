#include "sgtree/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace sgtree {
namespace {

std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now().time_since_epoch())
                                        .count());
}

// Shared depth-first counter. nkids(n) must equal kids(n).size(); it lets
// the level right above the target skip materializing leaves.
template <class Node, class Kids, class NKids>
std::uint64_t count_tree(const Node& n, std::uint32_t target, const Kids& kids, const NKids& nkids,
                         std::uint64_t& visited) {
  ++visited;
  if (n.genus == target) return 1;
  if (n.genus + 1 == target) {
    const std::uint64_t leaves = nkids(n);
    visited += leaves;
    return leaves;
  }
  std::uint64_t total = 0;
  for (const Node& child : kids(n)) total += count_tree(child, target, kids, nkids, visited);
  return total;
}

template <class Node, class Kids, class NKids>
CountResult run_count(Node root_node, std::uint32_t target, const Kids& kids, const NKids& nkids) {
  const std::uint64_t t0 = now_ns();
  std::uint64_t visited = 0;
  const std::uint64_t count = count_tree(root_node, target, kids, nkids, visited);
  return {target, count, visited, now_ns() - t0};
}

}  // namespace

// --- Apery set --------------------------------------------------------------

AperyNode apery_root() {
  AperyNode n;
  n.apery = {0};
  return n;
}

AperyNode apery_from(const FullSemigroup& s) {
  AperyNode n;
  n.conductor = s.conductor();
  n.multiplicity = s.multiplicity();
  n.genus = s.genus();
  n.apery.assign(n.multiplicity, 0);
  for (std::uint32_t r = 1; r < n.multiplicity; ++r) {
    std::uint32_t z = r;
    while (!s.contains(z)) z += n.multiplicity;
    n.apery[r] = z;
  }
  return n;
}

bool apery_is_generator(const AperyNode& n, std::uint32_t x) {
  const std::uint32_t m = n.multiplicity;
  if (x > m && n.contains(x - m)) return false;
  for (std::uint32_t r = 1; r < m; ++r) {
    const std::uint32_t a = n.apery[r];
    if (a < x && n.contains(x - a)) return false;
  }
  return true;
}

namespace {

// Removing the multiplicity is only possible from an ordinary node and
// yields the next ordinary one; every other removal keeps m and bumps
// one residue class.
AperyNode apery_ordinary_child(const AperyNode& n) {
  const std::uint32_t m = n.multiplicity + 1;
  AperyNode ch;
  ch.conductor = m;
  ch.multiplicity = m;
  ch.genus = n.genus + 1;
  ch.apery.resize(m);
  ch.apery[0] = 0;
  for (std::uint32_t r = 1; r < m; ++r) ch.apery[r] = m + r;
  return ch;
}

AperyNode apery_remove(const AperyNode& n, std::uint32_t x) {
  AperyNode ch = n;
  ch.apery[x % n.multiplicity] = x + n.multiplicity;
  ch.conductor = x + 1;
  ch.genus = n.genus + 1;
  return ch;
}

}  // namespace

std::vector<AperyNode> apery_children(const AperyNode& n) {
  std::vector<AperyNode> out;
  for (std::uint32_t x = n.conductor; x < n.conductor + n.multiplicity; ++x) {
    if (x == n.multiplicity)
      out.push_back(apery_ordinary_child(n));
    else if (apery_is_generator(n, x))
      out.push_back(apery_remove(n, x));
  }
  return out;
}

std::uint64_t apery_child_count(const AperyNode& n) {
  std::uint64_t count = 0;
  for (std::uint32_t x = n.conductor; x < n.conductor + n.multiplicity; ++x) {
    if (x == n.multiplicity || apery_is_generator(n, x)) ++count;
  }
  return count;
}

CountResult apery_count(std::uint32_t genus) {
  return run_count(apery_root(), genus, apery_children, apery_child_count);
}

// --- Generator tracking -----------------------------------------------------

GenTrackNode gentrack_root() {
  GenTrackNode n;
  n.marks = {Mark::NonGen, Mark::Gen};
  return n;
}

GenTrackNode gentrack_from(const FullSemigroup& s) {
  GenTrackNode n;
  n.conductor = s.conductor();
  n.multiplicity = s.multiplicity();
  n.genus = s.genus();
  const std::vector<std::uint32_t> gens = s.generators();
  n.marks.assign(n.conductor + n.multiplicity, Mark::Gap);
  for (std::uint32_t z = 0; z < n.marks.size(); ++z) {
    if (!s.contains(z)) continue;
    const bool gen = std::find(gens.begin(), gens.end(), z) != gens.end();
    n.marks[z] = gen ? Mark::Gen : Mark::NonGen;
  }
  return n;
}

namespace {

GenTrackNode gentrack_ordinary_child(const GenTrackNode& n) {
  const std::uint32_t m = n.multiplicity + 1;
  GenTrackNode ch;
  ch.conductor = m;
  ch.multiplicity = m;
  ch.genus = n.genus + 1;
  ch.marks.assign(2 * m, Mark::Gap);
  ch.marks[0] = Mark::NonGen;
  for (std::uint32_t z = m; z < 2 * m; ++z) ch.marks[z] = Mark::Gen;
  return ch;
}

GenTrackNode gentrack_remove(const GenTrackNode& n, std::uint32_t i) {
  const std::uint32_t m = n.multiplicity;
  GenTrackNode ch;
  ch.conductor = i + 1;
  ch.multiplicity = m;
  ch.genus = n.genus + 1;
  ch.marks = n.marks;
  ch.marks.resize(i + 1 + m, Mark::NonGen);
  ch.marks[i] = Mark::Gap;
  // Values in [old end, i+m) split as m + (member below i), hence NonGen,
  // which the resize already wrote. i + m itself loses that split and
  // needs the direct test.
  Mark& last = ch.marks[i + m];
  last = Mark::Gen;
  for (std::uint32_t a = m; 2 * a <= i + m; ++a) {
    if (ch.marks[a] != Mark::Gap && ch.marks[i + m - a] != Mark::Gap) {
      last = Mark::NonGen;
      break;
    }
  }
  return ch;
}

}  // namespace

std::vector<GenTrackNode> gentrack_children(const GenTrackNode& n) {
  std::vector<GenTrackNode> out;
  for (std::uint32_t i = n.conductor; i < n.conductor + n.multiplicity; ++i) {
    if (n.marks[i] != Mark::Gen) continue;
    out.push_back(i == n.multiplicity ? gentrack_ordinary_child(n) : gentrack_remove(n, i));
  }
  return out;
}

std::uint64_t gentrack_child_count(const GenTrackNode& n) {
  std::uint64_t count = 0;
  for (std::uint32_t i = n.conductor; i < n.conductor + n.multiplicity; ++i) {
    if (n.marks[i] == Mark::Gen) ++count;
  }
  return count;
}

CountResult gentrack_count(std::uint32_t genus) {
  return run_count(gentrack_root(), genus, gentrack_children, gentrack_child_count);
}

// --- Decomposition numbers ----------------------------------------------------

namespace {

std::uint32_t decomp_scratch(const std::vector<std::uint8_t>& member, std::uint32_t z) {
  std::uint32_t d = 0;
  for (std::uint32_t y = 0; 2 * y <= z; ++y) {
    if (member[y] && member[z - y]) ++d;
  }
  return d;
}

}  // namespace

DecompNode decomp_root() {
  DecompNode n;
  n.member = {1, 1, 1};
  n.d = {1, 2};
  return n;
}

DecompNode decomp_from(const FullSemigroup& s) {
  DecompNode n;
  n.conductor = s.conductor();
  n.multiplicity = s.multiplicity();
  n.genus = s.genus();
  const std::uint32_t window = n.conductor + 2 * n.multiplicity;
  n.member.resize(window);
  for (std::uint32_t z = 0; z < window; ++z) n.member[z] = s.contains(z) ? 1 : 0;
  n.d.resize(2 * n.multiplicity);
  for (std::uint32_t z = n.conductor; z < window; ++z)
    n.d[z - n.conductor] = decomp_scratch(n.member, z);
  return n;
}

namespace {

DecompNode decomp_ordinary_child(const DecompNode& n) {
  const std::uint32_t m = n.multiplicity + 1;
  DecompNode ch;
  ch.conductor = m;
  ch.multiplicity = m;
  ch.genus = n.genus + 1;
  const std::uint32_t window = 3 * m;
  ch.member.assign(window, 1);
  for (std::uint32_t z = 1; z < m; ++z) ch.member[z] = 0;
  ch.d.resize(2 * m);
  for (std::uint32_t z = m; z < window; ++z) ch.d[z - m] = decomp_scratch(ch.member, z);
  return ch;
}

DecompNode decomp_remove(const DecompNode& n, std::uint32_t x) {
  const std::uint32_t m = n.multiplicity;
  const std::uint32_t old_end = n.conductor + 2 * m;
  const std::uint32_t new_end = x + 1 + 2 * m;
  DecompNode ch;
  ch.conductor = x + 1;
  ch.multiplicity = m;
  ch.genus = n.genus + 1;
  ch.member = n.member;
  ch.member.resize(new_end, 1);
  ch.member[x] = 0;
  ch.d.resize(2 * m);
  // A decomposition of z that dies with x is z = x + (z - x) with the
  // smaller half a member; at most one ordered pair per z involves x.
  for (std::uint32_t z = x + 1; z < old_end; ++z)
    ch.d[z - ch.conductor] = n.d[z - n.conductor] - (n.member[z - x] ? 1 : 0);
  for (std::uint32_t z = old_end; z < new_end; ++z)
    ch.d[z - ch.conductor] = decomp_scratch(ch.member, z);
  return ch;
}

}  // namespace

std::vector<DecompNode> decomp_children(const DecompNode& n) {
  std::vector<DecompNode> out;
  for (std::uint32_t x = n.conductor; x < n.conductor + n.multiplicity; ++x) {
    if (x == n.multiplicity)
      out.push_back(decomp_ordinary_child(n));
    else if (n.d[x - n.conductor] == 1)
      out.push_back(decomp_remove(n, x));
  }
  return out;
}

std::uint64_t decomp_child_count(const DecompNode& n) {
  std::uint64_t count = 0;
  for (std::uint32_t x = n.conductor; x < n.conductor + n.multiplicity; ++x) {
    if (x == n.multiplicity || n.d[x - n.conductor] == 1) ++count;
  }
  return count;
}

std::uint32_t decomp_number_bruteforce(const FullSemigroup& s, std::uint32_t x) {
  std::uint32_t d = 0;
  for (std::uint32_t y = 0; 2 * y <= x; ++y) {
    if (s.contains(y) && s.contains(x - y)) ++d;
  }
  return d;
}

CountResult decomp_count(std::uint32_t genus) {
  return run_count(decomp_root(), genus, decomp_children, decomp_child_count);
}

// --- Dispatch -----------------------------------------------------------------

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::seeds_dfs: return "seeds-dfs";
    case Algorithm::seeds_recursive: return "seeds-recursive";
    case Algorithm::apery: return "apery";
    case Algorithm::gentrack: return "gentrack";
    case Algorithm::decomp: return "decomp";
  }
  return "?";
}

std::string_view algorithm_family(Algorithm a) {
  switch (a) {
    case Algorithm::seeds_dfs:
    case Algorithm::seeds_recursive: return "seeds";
    case Algorithm::apery: return "apery";
    case Algorithm::gentrack: return "gentrack";
    case Algorithm::decomp: return "decomp";
  }
  return "?";
}

std::string_view algorithm_variant(Algorithm a) {
  return a == Algorithm::seeds_recursive ? "recursive" : "dfs";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = {Algorithm::seeds_dfs, Algorithm::seeds_recursive,
                                             Algorithm::apery, Algorithm::gentrack,
                                             Algorithm::decomp};
  return all;
}

CountResult count_semigroups(Algorithm a, std::uint32_t genus) {
  // keep the root constructible even when the depth check will reject genus
  const std::size_t cap = std::min(capacity_for(genus), BitVec::max_bits);
  switch (a) {
    case Algorithm::seeds_dfs: return count_dfs(root(cap), genus);
    case Algorithm::seeds_recursive: return count_recursive(root(cap), genus);
    case Algorithm::apery: return apery_count(genus);
    case Algorithm::gentrack: return gentrack_count(genus);
    case Algorithm::decomp: return decomp_count(genus);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace sgtree
