#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgtree/baselines.hpp"
#include "sgtree/bench.hpp"
#include "sgtree/errors.hpp"
#include "sgtree/explorer.hpp"
#include "sgtree/semigroup.hpp"

namespace {

using namespace sgtree;

std::vector<std::string> algorithm_names() {
  std::vector<std::string> names;
  for (Algorithm a : all_algorithms()) names.emplace_back(algorithm_name(a));
  return names;
}

SeedNode root_for(std::uint32_t genus) {
  return root(std::min(capacity_for(genus), BitVec::max_bits));
}

void run_count(std::uint32_t genus, const std::string& algorithm, unsigned workers, int frontier) {
  const Algorithm a = *parse_algorithm(algorithm);
  const bool parallel = workers > 1 || frontier >= 0;
  if (parallel && a != Algorithm::seeds_dfs)
    throw CLI::ValidationError("--workers/--frontier-depth only apply to seeds-dfs");
  CountResult r;
  if (parallel) {
    const std::uint32_t cut =
        frontier >= 0 ? static_cast<std::uint32_t>(frontier) : std::min(genus, 14u);
    r = count_parallel(root_for(genus), genus, workers, cut);
  } else {
    r = count_semigroups(a, genus);
  }
  std::cout << r.count << '\n';
}

void run_sequence(std::uint32_t max_genus, const std::string& format) {
  const SequenceResult r = sequence(max_genus);
  if (format == "csv") {
    std::cout << "genus,count\n";
    for (std::uint32_t g = 0; g <= max_genus; ++g) std::cout << g << ',' << r.counts[g] << '\n';
  } else if (format == "json") {
    nlohmann::json j;
    j["max_genus"] = max_genus;
    j["counts"] = r.counts;
    std::cout << j.dump(2) << '\n';
  } else {
    const int width = static_cast<int>(std::to_string(r.counts.back()).size());
    for (std::uint32_t g = 0; g <= max_genus; ++g)
      std::cout << std::setw(5) << g << "  " << std::setw(width) << r.counts[g] << '\n';
  }
  if (!r.fibonacci_violations.empty()) {
    for (std::uint32_t g : r.fibonacci_violations)
      std::cerr << "warning: count at depth " << g + 2 << " is below the sum of the previous two\n";
  }
}

void run_enumerate(std::uint32_t genus, const std::string& format, std::uint64_t limit) {
  nlohmann::json array = nlohmann::json::array();
  std::uint64_t printed = 0;
  enumerate(root_for(genus), genus, [&](const SeedNode& n) {
    if (limit != 0 && printed >= limit) return;
    ++printed;
    if (format == "strings") {
      std::cout << n.gap_string() << ' ' << n.seed_string() << '\n';
    } else if (format == "json") {
      array.push_back(describe(decode_node(n)));
    } else {
      const FullSemigroup s = decode_node(n);
      std::string line;
      for (std::uint32_t gap : s.gaps()) {
        if (!line.empty()) line += ',';
        line += std::to_string(gap);
      }
      std::cout << line << '\n';
    }
  });
  if (format == "json") std::cout << array.dump(2) << '\n';
}

void run_seeds_table(const std::vector<std::uint32_t>& gaps,
                     const std::vector<std::uint32_t>& members) {
  if (gaps.empty() == members.empty())
    throw CLI::ValidationError("give exactly one of --gaps or --up-to-conductor");
  std::vector<std::uint32_t> gap_list = gaps;
  if (!members.empty()) {
    // members up to and including the conductor; everything else below is a gap
    const std::uint32_t conductor = *std::max_element(members.begin(), members.end());
    for (std::uint32_t z = 1; z < conductor; ++z) {
      if (std::find(members.begin(), members.end(), z) == members.end()) gap_list.push_back(z);
    }
  }
  const FullSemigroup s = FullSemigroup::from_gaps(gap_list);
  for (const auto& row : seeds_table_bruteforce(s)) {
    std::string line(row.size(), '0');
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) line[j] = '1';
    std::cout << line << '\n';
  }
}

void run_tree(std::uint32_t max_genus) {
  std::cout << "digraph tree {\n";
  std::cout << "  rankdir=TB;\n";
  std::cout << "  node [shape=box fontname=\"Courier\"];\n";
  std::uint64_t index = 0;
  walk(root_for(max_genus), max_genus,
       [&](const SeedNode& n, std::int64_t parent, std::uint32_t step) {
         std::cout << "  n" << index << " [label=\"" << n.gap_string() << "\\n"
                   << n.seed_string() << "\"];\n";
         if (parent >= 0)
           std::cout << "  n" << parent << " -> n" << index << " [label=\"" << step << "\"];\n";
         ++index;
       });
  std::cout << "}\n";
}

// Re-derives every node from its gap set and compares: packed strings,
// split rows, child counts, per-level totals across all algorithms, and
// the two-back growth property. Any failure reports and exits nonzero.
void run_verify(std::uint32_t max_genus) {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  walk(root_for(max_genus), max_genus, [&](const SeedNode& n, std::int64_t, std::uint32_t) {
    ++checked;
    const std::uint32_t c = n.conductor;
    auto complain = [&](const std::string& what) {
      ++failures;
      std::cerr << "fail: " << what << " at node " << n.gap_string() << '\n';
    };
    if (n.gap_bits.popcount() != n.genus) complain("gap bit count vs genus");
    if (n.gap_bits.test(c - 1)) complain("gap bit at conductor - 1");
    if (c >= 3 && !(n.seed_bits.test(c - 3) && n.seed_bits.test(c - 2) && n.seed_bits.test(c - 1)))
      complain("missing forced trailing seeds");
    const FullSemigroup s = decode_node(n);
    if (s.multiplicity() != n.multiplicity) complain("multiplicity");
    if (!(encode_node(s) == n)) complain("packed strings vs re-derivation");
    if (n.genus < max_genus) {
      const std::uint64_t expect = n.seed_bits.popcount_below(n.multiplicity);
      if (children(n).size() != expect) complain("child count vs row 0");
    }
  });
  std::cout << "checked " << checked << " nodes to depth " << max_genus << '\n';

  const SequenceResult seq = sequence(max_genus);
  for (std::uint32_t g : seq.fibonacci_violations) {
    ++failures;
    std::cerr << "fail: count at depth " << g + 2 << " below the sum of the previous two\n";
  }
  for (Algorithm a : all_algorithms()) {
    const CountResult r = count_semigroups(a, max_genus);
    if (r.count != seq.counts[max_genus])
      throw CountMismatch(std::string(algorithm_name(a)), seq.counts[max_genus], r.count);
    std::cout << algorithm_name(a) << ": " << r.count << '\n';
  }
  if (failures > 0) throw std::runtime_error(std::to_string(failures) + " checks failed");
  std::cout << "all checks passed\n";
}

void run_bench_cmd(std::uint32_t from, std::uint32_t to, const std::vector<std::string>& names,
                   unsigned reps, const std::string& output) {
  BenchOptions opt;
  opt.from = from;
  opt.to = to;
  opt.reps = reps;
  for (const std::string& name : names) opt.algorithms.push_back(*parse_algorithm(name));
  const std::vector<BenchRecord> records = run_bench(opt);
  if (output.empty())
    write_csv(records, std::cout);
  else
    write_csv(records, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup tree: counting, enumeration, cross-checks"};
  app.require_subcommand(1);
  const std::vector<std::string> names = algorithm_names();

  std::uint32_t genus = 0;
  std::uint32_t max_genus = 0;
  std::string algorithm = "seeds-dfs";
  unsigned workers = 1;
  int frontier = -1;
  std::string format;
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> gaps;
  std::vector<std::uint32_t> members;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::vector<std::string> bench_algorithms;
  unsigned reps = 3;
  std::string output;

  CLI::App* count = app.add_subcommand("count", "number of semigroups of a given genus");
  count->add_option("--genus", genus, "genus to count at")->required();
  count->add_option("--algorithm", algorithm, "counting algorithm")
      ->check(CLI::IsMember(names));
  count->add_option("--workers", workers, "threads (seeds-dfs only)")
      ->check(CLI::PositiveNumber);
  count->add_option("--frontier-depth", frontier,
                    "split depth for --workers (default min(genus, 14))")
      ->check(CLI::NonNegativeNumber);
  count->callback([&] { run_count(genus, algorithm, workers, frontier); });

  CLI::App* seq = app.add_subcommand("sequence", "counts for every genus up to a bound");
  seq->add_option("--max-genus", max_genus, "last genus to include")->required();
  format = "table";
  seq->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  seq->callback([&] { run_sequence(max_genus, format); });

  CLI::App* en = app.add_subcommand("enumerate", "list the semigroups of a given genus");
  en->add_option("--genus", genus, "genus to list")->required();
  std::string en_format = "gaps";
  en->add_option("--format", en_format, "gaps, strings or json")
      ->check(CLI::IsMember({"gaps", "strings", "json"}));
  en->add_option("--limit", limit, "print at most this many (0 = all)");
  en->callback([&] { run_enumerate(genus, en_format, limit); });

  CLI::App* st = app.add_subcommand("seeds-table", "seeds table of one semigroup");
  st->add_option("--gaps", gaps, "comma separated gap list")->delimiter(',');
  st->add_option("--up-to-conductor", members,
                 "comma separated nonzero members up to and including the conductor")
      ->delimiter(',');
  st->callback([&] { run_seeds_table(gaps, members); });

  CLI::App* tr = app.add_subcommand("tree", "the tree itself, one node per semigroup");
  tr->add_option("--max-genus", max_genus, "depth to stop at")->required();
  std::string tree_format = "dot";
  tr->add_option("--format", tree_format, "dot")->check(CLI::IsMember({"dot"}));
  tr->callback([&] { run_tree(max_genus); });

  CLI::App* ve = app.add_subcommand("verify", "re-derive every node and cross-check all counters");
  ve->add_option("--max-genus", max_genus, "depth to verify to")->required();
  ve->callback([&] { run_verify(max_genus); });

  CLI::App* be = app.add_subcommand("bench", "time the counting algorithms, emit csv");
  be->add_option("--from", from, "first genus")->required();
  be->add_option("--to", to, "last genus")->required();
  be->add_option("--algorithms", bench_algorithms, "subset to run (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(names));
  be->add_option("--reps", reps, "repetitions per measurement, best kept")
      ->check(CLI::PositiveNumber);
  be->add_option("--output", output, "write csv here instead of stdout");
  be->callback([&] { run_bench_cmd(from, to, bench_algorithms, reps, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
