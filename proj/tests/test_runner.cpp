#include <gtest/gtest.h>

#include <sstream>

#include "capdp/bench_suites.hpp"
#include "capdp/generators.hpp"
#include "capdp/io.hpp"
#include "capdp/monge.hpp"
#include "capdp/runner.hpp"

using namespace capdp;

namespace {

InstanceFile parse(const std::string& text, ProblemKind kind) {
  std::istringstream in(text);
  return parse_instance(in, kind);
}

std::string field(const RunReport& r, std::string_view key) {
  const std::string* v = r.find(key);
  return v ? *v : "<missing>";
}

std::string gen_text(ProblemKind kind, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::ostringstream out;
  switch (kind) {
    case ProblemKind::knapsack:
      write_knapsack(out, gen_knapsack(KnapsackFamily::few_distinct, {40, 200, 30, 50, 4}, rng));
      break;
    case ProblemKind::unbounded:
      write_knapsack(out, gen_unbounded(10, 20, 50, 5000, rng));
      break;
    case ProblemKind::dag:
      write_dag(out, with_universal_endpoints(gen_semiorder_dag(20, 50, 5, random_rewards(20, -5, 30, rng), rng)),
                0, 21);
      break;
    case ProblemKind::monge:
      write_monge(out, gen_random_monge(20, rng), 0, 20);
      break;
    case ProblemKind::sequence:
      write_sequence(out, {gen_sequence(60, -50, 50, rng), 6, 4});
      break;
  }
  return out.str();
}

}  // namespace

TEST(RunReport, TextFormat) {
  RunReport r;
  r.add("solver", std::string("td"));
  r.add("value", ExtValue(12));
  r.add("none", kBottom);
  r.add_profile("profile", ValueProfile{0, 3, kBottom});
  r.wall_ms = 1.5;
  EXPECT_EQ(r.to_text(false), "solver: td\nvalue: 12\nnone: -inf\nprofile: 0 3 -inf\n");
  EXPECT_EQ(r.to_text(), r.to_text(false) + "wall_ms: 1.500\n");
  EXPECT_EQ(field(r, "value"), "12");
  EXPECT_EQ(r.find("missing"), nullptr);
}

TEST(Runner, KnapsackReport) {
  const auto inst = parse("3 5\n2 3\n2 3\n3 4\n", ProblemKind::knapsack);
  const auto r = run_instance(inst, "td", {true, true, std::nullopt});
  EXPECT_EQ(field(r, "kind"), "knapsack");
  EXPECT_EQ(field(r, "D"), "2");
  EXPECT_EQ(field(r, "M"), "3");
  EXPECT_EQ(field(r, "V"), "4");
  EXPECT_EQ(field(r, "value"), "7");
  EXPECT_EQ(field(r, "profile"), "0 0 3 4 6 7");
  EXPECT_EQ(field(r, "agreement"), "true");
  EXPECT_FALSE(disagrees(r));
}

TEST(Runner, UnknownAlgorithm) {
  const auto inst = parse("1 5\n2 3\n", ProblemKind::knapsack);
  try {
    run_instance(inst, "greedy", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::usage);
  }
}

TEST(Runner, DoublingWindow) {
  const auto inst = parse("2 11\n3 5\n5 9\n", ProblemKind::unbounded);
  const auto r = run_instance(inst, "doubling", {true, true, std::nullopt});
  EXPECT_EQ(field(r, "value"), "19");
  EXPECT_EQ(field(r, "window_first"), "6");
  EXPECT_EQ(field(r, "window"), "10 10 14 15 18 19");
  EXPECT_EQ(field(r, "agreement"), "true");
}

TEST(Runner, InfeasibleBudgetReportsBottom) {
  const auto inst = parse("4 2 4\n5 1 4 3\n", ProblemKind::sequence);
  for (const auto& algo : algorithms_for(ProblemKind::sequence)) {
    EXPECT_EQ(field(run_instance(inst, algo, {}), "value"), "-inf");
  }
  const auto ok = parse("4 2 2\n5 1 4 3\n", ProblemKind::sequence);
  EXPECT_EQ(field(run_instance(ok, "separated", {true, false, std::nullopt}), "value"), "9");
}

TEST(Runner, EverySolverAgreesWithOracle) {
  for (auto kind : {ProblemKind::knapsack, ProblemKind::unbounded, ProblemKind::dag, ProblemKind::monge,
                    ProblemKind::sequence}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto inst = parse(gen_text(kind, seed), kind);
      std::string value;
      for (const auto& algo : algorithms_for(kind)) {
        const auto r = run_instance(inst, algo, {true, false, std::nullopt});
        EXPECT_FALSE(disagrees(r)) << to_string(kind) << " " << algo << " seed " << seed;
        if (value.empty()) value = field(r, "value");
        EXPECT_EQ(field(r, "value"), value) << to_string(kind) << " " << algo;
      }
    }
  }
}

TEST(Runner, ReportsAreDeterministic) {
  for (auto kind : {ProblemKind::knapsack, ProblemKind::dag, ProblemKind::monge}) {
    const auto inst = parse(gen_text(kind, 9), kind);
    for (const auto& algo : algorithms_for(kind)) {
      const RunOptions opts{false, true, std::nullopt};
      EXPECT_EQ(run_instance(inst, algo, opts).to_text(false),
                run_instance(inst, algo, opts).to_text(false));
    }
  }
}

TEST(Bench, UnknownSuite) {
  try {
    run_bench("nope", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::usage);
  }
}

TEST(Bench, QuickSuitesAreDeterministic) {
  for (const auto& suite : bench_suite_names()) {
    BenchOptions one;
    one.quick = true;
    BenchOptions two = one;
    two.jobs = 2;
    std::ostringstream a, b;
    write_bench_csv(a, run_bench(suite, one), false);
    write_bench_csv(b, run_bench(suite, two), false);
    EXPECT_EQ(a.str(), b.str()) << suite;
    EXPECT_EQ(a.str().rfind("suite,params,solver,value\n", 0), 0u);
  }
}
