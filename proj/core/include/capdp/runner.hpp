#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capdp/io.hpp"
#include "capdp/report.hpp"

namespace capdp {

struct RunOptions {
  bool check = false;    // cross-check against the kind's oracle
  bool profile = false;  // include the full profile in the report
  std::optional<std::int64_t> k;  // hop budget / subsequence length override
};

const std::vector<std::string>& algorithms_for(ProblemKind kind);
std::string_view oracle_for(ProblemKind kind);

/// Runs one solver. Errc::usage for an unknown algorithm; guard and
/// validation errors propagate. Infeasible budgets report value -inf.
RunReport run_instance(const InstanceFile& inst, std::string_view algo, const RunOptions& opts);

/// "agreement: false" present in the report.
bool disagrees(const RunReport& r);

}  // namespace capdp
