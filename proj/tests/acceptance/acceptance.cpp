// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "capdp/bench_suites.hpp"
#include "capdp/concave_conv.hpp"
#include "capdp/dag.hpp"
#include "capdp/generators.hpp"
#include "capdp/io.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/runner.hpp"
#include "capdp/smawk.hpp"
#include "capdp/unbounded.hpp"
#include "oracles.hpp"

using namespace capdp;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> t) {
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

// Medians of `runs` timings of f and g. One untimed warm-up each, then the
// runs alternate so drift on a shared host hits both sides alike.
template <class F, class G>
std::pair<double, double> paired_median_ms(int runs, F&& f, G&& g) {
  f();
  g();
  std::vector<double> tf, tg;
  for (int i = 0; i < runs; ++i) {
    auto t0 = Clock::now();
    f();
    tf.push_back(ms_since(t0));
    t0 = Clock::now();
    g();
    tg.push_back(ms_since(t0));
  }
  return {median(tf), median(tg)};
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts mismatches; keeps the first description.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& extra = "") const {
    std::string d = std::to_string(checked) + " checks, " + std::to_string(failed) + " failed";
    if (!extra.empty()) d += "; " + extra;
    if (failed) d += "; first: " + first;
    return {failed == 0, d};
  }
};

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

// 1. 0/1 knapsack solvers against Bellman.
Outcome knapsack_equivalence() {
  Tally tally;
  SplitMix64 rng(1001);
  const auto t0 = Clock::now();
  for (int it = 0; it < 1000; ++it) {
    std::vector<Item> items;
    for (auto n = rng.uniform(0, 40); n > 0; --n) items.push_back({rng.uniform(1, 20), rng.uniform(1, 50)});
    const KnapsackInstance inst(items, rng.uniform(0, 200));
    const ValueProfile ref = solve_knapsack_bellman(inst);
    tally.expect(solve_knapsack_td(inst) == ref, "td profile, case " + std::to_string(it));
    tally.expect(ExtValue(solve_knapsack_value_domain(inst)) == ref.back(),
                 "value-domain, case " + std::to_string(it));
  }
  const double ms = ms_since(t0);
  tally.expect(ms <= 60000, "suite took " + fmt_ms(ms));
  return tally.outcome(fmt_ms(ms));
}

// 2. Unbounded solvers against the direct DP.
Outcome unbounded_equivalence() {
  Tally tally;
  SplitMix64 rng(1002);
  const auto t0 = Clock::now();
  for (int it = 0; it < 1000; ++it) {
    const std::int64_t m = rng.uniform(1, 40);
    std::vector<Item> items;
    for (auto n = rng.uniform(1, 12); n > 0; --n) items.push_back({rng.uniform(1, m), rng.uniform(1, 60)});
    const UnboundedInstance inst(items, rng.uniform(0, 5000));
    const ExtValue ref = solve_unbounded_dp(inst).back();
    const std::string tag = ", case " + std::to_string(it);
    tally.expect(ExtValue(solve_unbounded_doubling(inst)) == ref, "doubling" + tag);
    tally.expect(ExtValue(solve_unbounded_steinitz(inst)) == ref, "steinitz" + tag);
    tally.expect(ExtValue(solve_unbounded_value_domain(inst)) == ref, "value-domain" + tag);
  }
  const double ms = ms_since(t0);
  tally.expect(ms <= 60000, "suite took " + fmt_ms(ms));
  return tally.outcome(fmt_ms(ms));
}

// 3. Concave and k-step convolutions against the naive one; SMAWK against a
// row scan.
Outcome convolution_correctness() {
  Tally tally;
  SplitMix64 rng(1003);
  for (int it = 0; it < 1000; ++it) {
    const auto a = oracle::random_arbitrary(static_cast<std::size_t>(rng.uniform(1, 256)), rng, true);
    const auto b = oracle::random_concave(static_cast<std::size_t>(rng.uniform(1, 256)), rng, true);
    tally.expect(conv_concave(a, b) == naive_maxplus_conv(a, b), "concave, case " + std::to_string(it));
  }
  for (int it = 0; it < 1000; ++it) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto a = oracle::random_arbitrary(static_cast<std::size_t>(rng.uniform(1, 256)), rng, true);
    const auto b = oracle::random_kstep(static_cast<std::size_t>(rng.uniform(1, 256)), k, rng);
    tally.expect(conv_kstep_concave(a, b, k) == naive_maxplus_conv(a, b),
                 "k-step, case " + std::to_string(it));
  }
  for (int it = 0; it < 1000; ++it) {
    const auto m = oracle::random_inverse_monge(static_cast<std::size_t>(rng.uniform(1, 200)),
                                                static_cast<std::size_t>(rng.uniform(1, 200)), rng);
    const auto o = oracle::dense_oracle(m);
    tally.expect(smawk_row_maxima(o) == brute_row_maxima(o), "smawk, case " + std::to_string(it));
  }
  return tally.outcome();
}

// 4. Property P forces concavity; a violation admits a non-concave profile.
Outcome concavity_characterization() {
  Tally tally;
  SplitMix64 rng(1004);
  int with_p = 0, without_p = 0, attempts = 0;
  while ((with_p < 100 || without_p < 20) && attempts < 100000) {
    ++attempts;
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 14));
    const std::uint64_t num = static_cast<std::uint64_t>(rng.uniform(1, 9));
    const auto g = gen_random_transitive_dag(n, num, 10, std::vector<ExtValue>(n, ExtValue(0)), rng);
    const auto w = check_property_p(g);
    const Node sink = static_cast<Node>(n + 1);
    if (w.holds && with_p < 100) {
      ++with_p;
      const auto h = with_universal_endpoints(g.with_rewards(random_rewards(n, -50, 100, rng)));
      const auto p = dp_hop_profile(h, 0, sink, n).exact;
      tally.expect(check_concave(p).is_concave(), "P holds but profile not concave, attempt " +
                                                      std::to_string(attempts));
    } else if (!w.holds && without_p < 20) {
      ++without_p;
      const auto h = with_universal_endpoints(g.with_rewards(counterexample_rewards(n, w, kBottom)));
      const auto p = dp_hop_profile(h, 0, sink, n).exact;
      tally.expect(!check_concave(p).is_concave(), "witness rewards gave a concave profile, attempt " +
                                                       std::to_string(attempts));
    }
  }
  tally.expect(with_p == 100 && without_p == 20, "not enough graphs generated");
  return tally.outcome(std::to_string(with_p) + " with P, " + std::to_string(without_p) + " without");
}

// 5. Lagrangian search against the exact DP, with a probe budget.
Outcome lagrangian_equals_dp() {
  Tally tally;
  SplitMix64 rng(1005);
  int max_probes = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 58));
    auto rewards = random_rewards(n, -100, 1000, rng);
    const auto base = it % 2 == 0
                          ? gen_semiorder_dag(n, 100, rng.uniform(1, 20), rewards, rng)
                          : separated_dense_dag(n, static_cast<std::size_t>(rng.uniform(1, 5)), rewards);
    const auto g = with_universal_endpoints(base);
    const Node t = static_cast<Node>(n + 1);
    const auto at_most = dp_hop_profile(g, 0, t, n).at_most();
    const double limit =
        2 * std::log2(4.0 * static_cast<double>(g.size()) * static_cast<double>(g.reward_bound())) + 4;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
      const auto r = solve_lagrangian(g, 0, t, k);
      const std::string tag = "case " + std::to_string(it) + " k=" + std::to_string(k);
      tally.expect(ExtValue(r.value) == at_most[static_cast<std::size_t>(k)], "value, " + tag);
      tally.expect(r.probes <= limit, "probes " + std::to_string(r.probes) + ", " + tag);
      max_probes = std::max(max_probes, r.probes);
    }
  }
  return tally.outcome("max probes " + std::to_string(max_probes));
}

// 6. Delta-separated subsequences: Lagrangian against the O(nk) DP, plus one
// large instance under a time limit.
Outcome separated() {
  Tally tally;
  SplitMix64 rng(1006);
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2000));
    const auto a = gen_sequence(n, -1000, 1000, rng);
    const std::int64_t d = rng.uniform(1, 40);
    const std::int64_t kmax = std::min<std::int64_t>(50, (static_cast<std::int64_t>(n) - 1) / d + 1);
    const std::int64_t k = rng.uniform(1, kmax);
    tally.expect(solve_sparse_separated(a, k, d).value == sparse_separated_dp(a, k, d),
                 "case " + std::to_string(it));
  }
  const auto big = gen_sequence(1'000'000, -1'000'000, 1'000'000, rng);
  const auto t0 = Clock::now();
  const auto r = solve_sparse_separated(big, 1000, 10);
  const double ms = ms_since(t0);
  tally.expect(ms <= 10000, "n=1e6 took " + fmt_ms(ms));
  tally.expect(r.value == sparse_separated_dp(big, 1000, 10), "n=1e6 value");
  return tally.outcome("n=1e6 k=1e3 in " + fmt_ms(ms));
}

// 7. Monge solvers against the hop-bounded DP.
Outcome monge() {
  Tally tally;
  SplitMix64 rng(1007);
  auto check = [&](const MongeDagOracle& g, const std::string& tag) {
    const Node t = g.last();
    const auto dp = monge_dp_hop_profile(g, 0, t, g.last());
    MongeStats stats;
    tally.expect(monge_all_k(g, 0, t, &stats).exact == dp.exact, "all-k, " + tag);
    const auto at_most = dp.at_most();
    std::vector<std::int64_t> ks{1, t, std::max<std::int64_t>(1, t / 2)};
    for (int i = 0; i < 5; ++i) ks.push_back(rng.uniform(1, t));
    for (std::int64_t k : ks) {
      tally.expect(ExtValue(monge_best_path(g, 0, t, k).value) == at_most[static_cast<std::size_t>(k)],
                   "best-path k=" + std::to_string(k) + ", " + tag);
    }
    for (std::int64_t k : {std::int64_t{0}, std::int64_t{1}, rng.uniform(1, t), std::int64_t{t}}) {
      tally.expect(monge_all_targets(g, 0, k, &stats) == monge_dp_all_targets(g, 0, k),
                   "all-targets k=" + std::to_string(k) + ", " + tag);
    }
  };
  for (int it = 0; it < 100; ++it) {
    check(gen_random_monge(static_cast<std::size_t>(rng.uniform(1, 99)), rng, rng.uniform(0, 4),
                           rng.uniform(0, 8), 50),
          "random case " + std::to_string(it));
  }
  for (std::size_t n = 1; n <= 99; n += 7) {
    check(gen_squared_monge(n), "squared n=" + std::to_string(n));
    check(gen_squared_monge(n, n), "perturbed n=" + std::to_string(n));
  }
  return tally.outcome();
}

// 8. Exhaustive grid through the knapsack gadget.
Outcome knapsack_bridge() {
  Tally tally;
  std::vector<Item> items;
  std::function<void(std::size_t)> grid = [&](std::size_t n) {
    if (n > 0) {
      for (std::int64_t cap = 0; cap <= 6; ++cap) {
        const KnapsackInstance inst(items, cap);
        const auto kd = knapsack_to_dag(inst);
        const auto p = dp_hop_profile(kd.graph, kd.source, kd.sink,
                                      static_cast<std::size_t>(kd.hop_budget))
                           .at_most();
        const std::int64_t best = p.back().value() - kd.offset;
        tally.expect(best % kd.scale == 0 &&
                         ExtValue(best / kd.scale) == solve_knapsack_bellman(inst).back(),
                     "items=" + std::to_string(items.size()) + " T=" + std::to_string(cap));
      }
    }
    if (n == 4) return;
    for (std::int64_t w = 1; w <= 3; ++w) {
      for (std::int64_t v = 1; v <= 3; ++v) {
        items.push_back({w, v});
        grid(n + 1);
        items.pop_back();
      }
    }
  };
  grid(0);
  return tally.outcome();
}

// 9. Coarse runtime scaling, medians of five runs per side.
Outcome runtime_scaling() {
  Tally tally;
  std::string notes;
  SplitMix64 rng(1009);
  {
    KnapsackParams p;
    p.n = 200'000;
    p.capacity = 100'000;
    p.max_weight = 1000;
    p.max_value = 1000;
    p.distinct = 16;
    const RawKnapsack raw = gen_knapsack(KnapsackFamily::few_distinct, p, rng);
    const KnapsackInstance inst(raw.items, raw.capacity);
    ValueProfile a, b;
    const auto [td, bellman] = paired_median_ms(
        5, [&] { a = solve_knapsack_td(inst); }, [&] { b = solve_knapsack_bellman(inst); });
    tally.expect(a == b, "td and Bellman profiles differ");
    tally.expect(bellman >= 5 * td, "(a) td " + fmt_ms(td) + " vs Bellman " + fmt_ms(bellman));
    notes += "(a) td " + fmt_ms(td) + ", Bellman " + fmt_ms(bellman);
  }
  {
    const RawKnapsack raw = gen_unbounded(60, 100, 1000, 0, rng);
    const UnboundedInstance small(raw.items, 1'000'000);
    const UnboundedInstance large(raw.items, 1'000'000'000);
    // One solve is sub-millisecond; time a fixed batch per run.
    constexpr int kBatch = 100;
    std::int64_t sink = 0;
    const auto [t_small, t_large] = paired_median_ms(
        5,
        [&] {
          for (int i = 0; i < kBatch; ++i) sink += solve_unbounded_doubling(small);
        },
        [&] {
          for (int i = 0; i < kBatch; ++i) sink += solve_unbounded_doubling(large);
        });
    tally.expect(sink != 0, "doubling returned zero");
    tally.expect(t_large <= 2 * t_small,
                 "(b) T=1e9 " + fmt_ms(t_large) + " vs T=1e6 " + fmt_ms(t_small));
    notes += "; (b) " + std::to_string(kBatch) + " solves T=1e6 " + fmt_ms(t_small) + ", T=1e9 " +
             fmt_ms(t_large);
  }
  {
    auto sized = [&](std::size_t len) {
      return std::pair{oracle::random_arbitrary(len, rng), oracle::random_concave(len, rng)};
    };
    const auto [a19, b19] = sized(std::size_t{1} << 19);
    const auto [a20, b20] = sized(std::size_t{1} << 20);
    std::size_t sink = 0;
    const auto [t19, t20] = paired_median_ms(
        5, [&] { sink += conv_concave(a19, b19).size(); },
        [&] { sink += conv_concave(a20, b20).size(); });
    tally.expect(sink > 0, "empty convolution");
    tally.expect(t20 <= 3 * t19, "(c) 2^20 " + fmt_ms(t20) + " vs 2^19 " + fmt_ms(t19));
    notes += "; (c) 2^19 " + fmt_ms(t19) + ", 2^20 " + fmt_ms(t20);
  }
  return tally.outcome(notes);
}

// 10. Same seed, same reports: solver reports for every kind and the quick
// variant of every bench suite, each produced twice from scratch.
Outcome determinism() {
  Tally tally;
  auto reports = [](ProblemKind kind, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::ostringstream file;
    switch (kind) {
      case ProblemKind::knapsack:
        write_knapsack(file, gen_knapsack(KnapsackFamily::uncorrelated, {40, 200, 20, 50, 8}, rng));
        break;
      case ProblemKind::unbounded:
        write_knapsack(file, gen_unbounded(12, 40, 60, 5000, rng));
        break;
      case ProblemKind::dag:
        write_dag(file, gen_semiorder_dag(40, 100, 9, random_rewards(40, -100, 1000, rng), rng), 0, 39);
        break;
      case ProblemKind::monge: {
        const auto g = gen_random_monge(60, rng);
        write_monge(file, g, 0, g.last());
        break;
      }
      case ProblemKind::sequence:
        write_sequence(file, {gen_sequence(2000, -1000, 1000, rng), 50, 7});
        break;
    }
    std::istringstream in(file.str());
    const InstanceFile inst = parse_instance(in, kind);
    std::string out;
    for (const auto& algo : algorithms_for(kind)) {
      out += run_instance(inst, algo, {true, true, std::nullopt}).to_text(false);
    }
    return out;
  };
  for (auto kind : {ProblemKind::knapsack, ProblemKind::unbounded, ProblemKind::dag,
                    ProblemKind::monge, ProblemKind::sequence}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const std::string first = reports(kind, seed);
      tally.expect(first == reports(kind, seed),
                   std::string(to_string(kind)) + " seed " + std::to_string(seed));
      tally.expect(first.find("agreement: false") == std::string::npos,
                   std::string(to_string(kind)) + " disagreement, seed " + std::to_string(seed));
    }
  }
  for (const auto& suite : bench_suite_names()) {
    BenchOptions opts;
    opts.quick = true;
    std::ostringstream a, b;
    write_bench_csv(a, run_bench(suite, opts), false);
    write_bench_csv(b, run_bench(suite, opts), false);
    tally.expect(a.str() == b.str(), "bench suite " + suite);
  }
  return tally.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"knapsack oracle equivalence", knapsack_equivalence},
      {"unbounded oracle equivalence", unbounded_equivalence},
      {"convolution and SMAWK correctness", convolution_correctness},
      {"concavity characterization", concavity_characterization},
      {"Lagrangian equals DP", lagrangian_equals_dp},
      {"delta-separated subsequences", separated},
      {"Monge solvers", monge},
      {"knapsack to DAG bridge", knapsack_bridge},
      {"runtime scaling", runtime_scaling},
      {"determinism", determinism},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d (%s): %s [%s] (%s)\n", id, criteria[i].first, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), fmt_ms(ms_since(t0)).c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
