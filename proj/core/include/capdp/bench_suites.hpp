#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace capdp {

struct BenchRow {
  std::string suite;
  std::string params;  // "n=1000;T=100000"
  std::string solver;
  double wall_ms = 0.0;  // median over repeats
  std::string value;
};

struct BenchOptions {
  std::uint64_t seed = 42;
  unsigned jobs = 1;     // cells run concurrently when > 1
  unsigned repeats = 1;
  bool quick = false;    // shrunken sizes, for smoke tests
};

const std::vector<std::string>& bench_suite_names();

/// Instances are generated from the seed before any cell runs, so values do
/// not depend on scheduling. Errc::usage for an unknown suite.
std::vector<BenchRow> run_bench(std::string_view suite, const BenchOptions& opts);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing = true);

}  // namespace capdp
