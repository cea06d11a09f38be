#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgtree/baselines.hpp"

namespace sgtree {

inline constexpr const char* kBenchCsvHeader =
    "algorithm,variant,genus,count,elapsed_ns,nodes_per_second";

struct BenchRecord {
  std::string algorithm;  // family: seeds, apery, gentrack, decomp
  std::string variant;    // dfs or recursive
  std::uint32_t genus = 0;
  std::uint64_t count = 0;
  std::uint64_t elapsed_ns = 0;        // best of the repetitions
  std::uint64_t nodes_per_second = 0;  // visited nodes over that best time
};

struct BenchOptions {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::vector<Algorithm> algorithms;  // empty means all
  unsigned reps = 3;
};

// One record per (genus, algorithm), genus ascending, algorithms in the
// given order. Every algorithm at a genus must report the count the first
// one did; a disagreement throws CountMismatch and nothing is returned.
std::vector<BenchRecord> run_bench(const BenchOptions& opt);

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void write_csv(const std::vector<BenchRecord>& records, const std::string& path);

// Strict inverse of write_csv; throws std::runtime_error on any malformed
// line or a wrong header.
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace sgtree
