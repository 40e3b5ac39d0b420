#include "capdp/bench_suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <ostream>
#include <mutex>
#include <thread>

#include "capdp/concave_conv.hpp"
#include "capdp/dag.hpp"
#include "capdp/generators.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/unbounded.hpp"

namespace capdp {

const std::vector<std::string>& bench_suite_names() {
  static const std::vector<std::string> names{"knapsack-scaling", "unbounded-T-independence",
                                              "conv-linearity", "separated-large",
                                              "monge-all-k"};
  return names;
}

namespace {

struct Cell {
  std::string params;
  std::string solver;
  std::function<std::string()> body;
};

std::string ext(ExtValue v) { return to_string(v); }

std::vector<Cell> knapsack_scaling(const BenchOptions& o) {
  std::vector<Cell> cells;
  const std::vector<std::size_t> ns =
      o.quick ? std::vector<std::size_t>{1000, 2000} : std::vector<std::size_t>{10000, 100000, 200000};
  const std::int64_t T = o.quick ? 10000 : 100000;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    SplitMix64 rng(o.seed + idx);
    KnapsackParams p;
    p.n = ns[idx];
    p.capacity = T;
    p.max_weight = 1000;
    p.max_value = 1000;
    p.distinct = 16;
    const RawKnapsack raw = gen_knapsack(KnapsackFamily::few_distinct, p, rng);
    auto inst = std::make_shared<KnapsackInstance>(raw.items, raw.capacity);
    const std::string params = "n=" + std::to_string(p.n) + ";D=" +
                               std::to_string(inst->distinct_weights()) + ";T=" + std::to_string(T);
    cells.push_back({params, "td", [inst] { return ext(solve_knapsack_td(*inst).back()); }});
    cells.push_back({params, "bellman", [inst] { return ext(solve_knapsack_bellman(*inst).back()); }});
  }
  return cells;
}

std::vector<Cell> unbounded_t(const BenchOptions& o) {
  std::vector<Cell> cells;
  const std::vector<std::int64_t> ts{1'000'000, 10'000'000, 100'000'000, 1'000'000'000};
  SplitMix64 rng(o.seed);
  const RawKnapsack base = gen_unbounded(60, 100, 1000, 0, rng);
  for (std::int64_t T : ts) {
    auto inst = std::make_shared<UnboundedInstance>(base.items, T);
    const std::string params = "M=" + std::to_string(inst->max_weight()) + ";T=" + std::to_string(T);
    cells.push_back({params, "doubling", [inst] { return std::to_string(solve_unbounded_doubling(*inst)); }});
    cells.push_back({params, "steinitz", [inst] { return std::to_string(solve_unbounded_steinitz(*inst)); }});
  }
  return cells;
}

ValueProfile random_concave(std::size_t n, SplitMix64& rng) {
  ValueProfile b(n);
  std::int64_t v = 0;
  std::int64_t slope = rng.uniform(0, 1000);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = v;
    slope -= rng.uniform(0, 3);
    v += slope;
  }
  return b;
}

std::vector<Cell> conv_linearity(const BenchOptions& o) {
  std::vector<Cell> cells;
  const int top = o.quick ? 14 : 20;
  for (int e = 10; e <= top; ++e) {
    SplitMix64 rng(o.seed + static_cast<std::uint64_t>(e));
    const std::size_t n = std::size_t{1} << e;
    auto a = std::make_shared<ValueProfile>(n);
    for (auto& x : *a) x = rng.uniform(-1'000'000, 1'000'000);
    auto b = std::make_shared<ValueProfile>(random_concave(n, rng));
    cells.push_back({"size=" + std::to_string(n), "conv_concave", [a, b] {
                       const ValueProfile c = conv_concave(*a, *b);
                       return ext(*std::max_element(c.begin(), c.end()));
                     }});
  }
  return cells;
}

std::vector<Cell> separated_large(const BenchOptions& o) {
  std::vector<Cell> cells;
  const std::vector<std::size_t> ns =
      o.quick ? std::vector<std::size_t>{1000, 10000} : std::vector<std::size_t>{10000, 100000, 1000000};
  const std::int64_t k = o.quick ? 50 : 1000;
  const std::int64_t delta = 10;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    SplitMix64 rng(o.seed + idx);
    auto a = std::make_shared<std::vector<std::int64_t>>(gen_sequence(ns[idx], -1000, 1'000'000, rng));
    const std::string params = "n=" + std::to_string(ns[idx]) + ";k=" + std::to_string(k) +
                               ";delta=" + std::to_string(delta);
    cells.push_back({params, "separated", [a, k] {
                       return std::to_string(solve_sparse_separated(*a, k, delta).value);
                     }});
    if (ns[idx] <= 100000) {
      cells.push_back({params, "dp", [a, k] { return std::to_string(sparse_separated_dp(*a, k, delta)); }});
    }
  }
  return cells;
}

std::string profile_digest(const ValueProfile& p) {
  // Sum of finite entries, enough to compare runs and solvers.
  __int128 sum = 0;
  for (ExtValue v : p) {
    if (v.is_finite()) sum += v.value();
  }
  return std::to_string(static_cast<long long>(sum));
}

std::vector<Cell> monge_all_k_suite(const BenchOptions& o) {
  std::vector<Cell> cells;
  const std::vector<std::size_t> ns =
      o.quick ? std::vector<std::size_t>{32, 64} : std::vector<std::size_t>{64, 128, 256, 512};
  for (std::size_t n : ns) {
    auto g = std::make_shared<MongeDagOracle>(gen_squared_monge(n, o.seed));
    const std::string params = "n=" + std::to_string(n);
    cells.push_back({params, "all-k", [g] {
                       return profile_digest(monge_all_k(*g, 0, g->last()).exact);
                     }});
    cells.push_back({params, "dp", [g] {
                       return profile_digest(monge_dp_hop_profile(*g, 0, g->last(), g->last()).exact);
                     }});
  }
  return cells;
}

}  // namespace

std::vector<BenchRow> run_bench(std::string_view suite, const BenchOptions& opts) {
  std::vector<Cell> cells;
  if (suite == "knapsack-scaling") {
    cells = knapsack_scaling(opts);
  } else if (suite == "unbounded-T-independence") {
    cells = unbounded_t(opts);
  } else if (suite == "conv-linearity") {
    cells = conv_linearity(opts);
  } else if (suite == "separated-large") {
    cells = separated_large(opts);
  } else if (suite == "monge-all-k") {
    cells = monge_all_k_suite(opts);
  } else {
    throw Error(Errc::usage, "unknown bench suite '" + std::string(suite) + "'");
  }

  std::vector<BenchRow> rows(cells.size());
  const unsigned repeats = std::max(1U, opts.repeats);
  auto run_cell = [&](std::size_t i) {
    std::vector<double> times;
    std::string value;
    for (unsigned r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      value = cells[i].body();
      times.push_back(
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    rows[i] = {std::string(suite), cells[i].params, cells[i].solver, times[times.size() / 2], value};
  };

  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
        try {
          run_cell(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing) {
  out << "suite,params,solver," << (with_timing ? "wall_ms," : "") << "value\n";
  for (const BenchRow& r : rows) {
    out << r.suite << ',' << r.params << ',' << r.solver << ',';
    if (with_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f,", r.wall_ms);
      out << buf;
    }
    out << r.value << '\n';
  }
}

}  // namespace capdp
