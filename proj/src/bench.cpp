#include "sgtree/bench.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sgtree {

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
  if (opt.to < opt.from) throw std::invalid_argument("bench range is inverted");
  if (opt.reps == 0) throw std::invalid_argument("bench needs at least one repetition");
  const std::vector<Algorithm>& algorithms =
      opt.algorithms.empty() ? all_algorithms() : opt.algorithms;

  std::vector<BenchRecord> records;
  for (std::uint32_t genus = opt.from; genus <= opt.to; ++genus) {
    bool have_reference = false;
    std::uint64_t reference = 0;
    for (Algorithm a : algorithms) {
      CountResult best{};
      for (unsigned rep = 0; rep < opt.reps; ++rep) {
        const CountResult r = count_semigroups(a, genus);
        if (rep == 0 || r.elapsed_ns < best.elapsed_ns) best = r;
      }
      if (!have_reference) {
        reference = best.count;
        have_reference = true;
      } else if (best.count != reference) {
        throw CountMismatch(std::string(algorithm_name(a)) + " at genus " + std::to_string(genus),
                            reference, best.count);
      }
      BenchRecord rec;
      rec.algorithm = algorithm_family(a);
      rec.variant = algorithm_variant(a);
      rec.genus = genus;
      rec.count = best.count;
      rec.elapsed_ns = best.elapsed_ns > 0 ? best.elapsed_ns : 1;
      rec.nodes_per_second =
          static_cast<std::uint64_t>(best.nodes_visited * 1000000000.0 / rec.elapsed_ns);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.algorithm << ',' << r.variant << ',' << r.genus << ',' << r.count << ','
        << r.elapsed_ns << ',' << r.nodes_per_second << '\n';
  }
}

void write_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(records, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv");
  if (line != kBenchCsvHeader) throw std::runtime_error("bad csv header: " + line);

  std::vector<BenchRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw std::runtime_error("blank csv line " + std::to_string(lineno));
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 6)
      throw std::runtime_error("csv line " + std::to_string(lineno) + " has " +
                               std::to_string(fields.size()) + " fields");
    BenchRecord r;
    r.algorithm = fields[0];
    r.variant = fields[1];
    try {
      r.genus = static_cast<std::uint32_t>(std::stoul(fields[2]));
      r.count = std::stoull(fields[3]);
      r.elapsed_ns = std::stoull(fields[4]);
      r.nodes_per_second = std::stoull(fields[5]);
    } catch (const std::exception&) {
      throw std::runtime_error("csv line " + std::to_string(lineno) + " has a bad number");
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace sgtree
