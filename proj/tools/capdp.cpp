// capdp: solve, cross-check, benchmark and generate capacitated DP instances.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "capdp/bench_suites.hpp"
#include "capdp/generators.hpp"
#include "capdp/io.hpp"
#include "capdp/runner.hpp"

namespace {

using namespace capdp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitGuard = 4;

int exit_code(Errc code) {
  switch (code) {
    case Errc::usage: return kExitUsage;
    case Errc::guard:
    case Errc::scale_limit: return kExitGuard;
    default: return kExitInput;
  }
}

struct SolveArgs {
  std::string kind, algo, path;
  bool check = false, profile = false, lax = false;
  std::optional<std::int64_t> k;
};

struct CheckArgs {
  std::string kind, path;
  std::vector<std::string> algos;
  bool lax = false;
  std::optional<std::int64_t> k;
};

struct BenchArgs {
  std::string suite;
  std::string out;
  BenchOptions opts;
};

struct GenArgs {
  std::string kind;
  std::string family;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t n = 20;
  std::int64_t capacity = 100;
  std::int64_t max_weight = 20;
  std::int64_t max_value = 50;
  std::size_t distinct = 4;
  std::int64_t k = 3;
  std::int64_t delta = 2;
  std::int64_t gap = 3;
  std::int64_t reward = 100;
  std::uint64_t perturb = 0;
};

int do_solve(const SolveArgs& a) {
  const InstanceFile inst = parse_instance_file(a.path, parse_kind(a.kind), {a.lax});
  RunOptions opts{a.check, a.profile, a.k};
  const RunReport r = run_instance(inst, a.algo, opts);
  std::cout << r.to_text();
  return disagrees(r) ? kExitDisagree : kExitOk;
}

int do_check(const CheckArgs& a) {
  const ProblemKind kind = parse_kind(a.kind);
  const InstanceFile inst = parse_instance_file(a.path, kind, {a.lax});
  const std::vector<std::string> algos = a.algos.empty() ? algorithms_for(kind) : a.algos;
  bool bad = false;
  for (std::size_t i = 0; i < algos.size(); ++i) {
    const RunReport r = run_instance(inst, algos[i], RunOptions{true, false, a.k});
    if (i) std::cout << '\n';
    std::cout << r.to_text();
    bad = bad || disagrees(r);
  }
  return bad ? kExitDisagree : kExitOk;
}

int do_bench(const BenchArgs& a) {
  const std::vector<BenchRow> rows = run_bench(a.suite, a.opts);
  if (a.out.empty() || a.out == "-") {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error(Errc::io, "cannot write '" + a.out + "'");
    write_bench_csv(f, rows);
  }
  return kExitOk;
}

void generate(const GenArgs& a, std::ostream& out) {
  SplitMix64 rng(a.seed);
  const ProblemKind kind = parse_kind(a.kind);
  switch (kind) {
    case ProblemKind::knapsack: {
      KnapsackParams p;
      p.n = a.n;
      p.capacity = a.capacity;
      p.max_weight = a.max_weight;
      p.max_value = a.max_value;
      p.distinct = a.distinct;
      const auto family = parse_knapsack_family(a.family.empty() ? "uncorrelated" : a.family);
      write_knapsack(out, gen_knapsack(family, p, rng));
      return;
    }
    case ProblemKind::unbounded:
      write_knapsack(out, gen_unbounded(a.n, a.max_weight, a.max_value, a.capacity, rng));
      return;
    case ProblemKind::dag: {
      if (a.n < 1) throw Error(Errc::validation, "n must be positive");
      auto rewards = random_rewards(a.n, -a.reward, a.reward, rng);
      const std::string family = a.family.empty() ? "semiorder" : a.family;
      NodeWeightedDag g;
      if (family == "semiorder") {
        g = gen_semiorder_dag(a.n, 2 * static_cast<std::int64_t>(a.n), a.gap, std::move(rewards), rng);
      } else if (family == "random") {
        g = gen_random_transitive_dag(a.n, 1, 4, std::move(rewards), rng);
      } else {
        throw Error(Errc::usage, "dag families: semiorder|random");
      }
      write_dag(out, g, 0, static_cast<Node>(a.n - 1));
      return;
    }
    case ProblemKind::monge: {
      const std::string family = a.family.empty() ? "squared" : a.family;
      if (family == "squared") {
        write_monge(out, gen_squared_monge(a.n, a.perturb), 0, static_cast<Node>(a.n));
      } else if (family == "random") {
        write_monge(out, gen_random_monge(a.n, rng), 0, static_cast<Node>(a.n));
      } else {
        throw Error(Errc::usage, "monge families: squared|random");
      }
      return;
    }
    case ProblemKind::sequence:
      write_sequence(out, {gen_sequence(a.n, -a.reward, a.reward, rng), a.k, a.delta});
      return;
  }
}

int do_gen(const GenArgs& a) {
  if (a.out.empty() || a.out == "-") {
    generate(a, std::cout);
  } else {
    std::ostringstream buf;
    generate(a, buf);
    std::ofstream f(a.out);
    if (!f) throw Error(Errc::io, "cannot write '" + a.out + "'");
    f << buf.str();
  }
  return kExitOk;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "|") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacitated dynamic programming solvers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run one solver on an instance file");
  s->add_option("kind", solve.kind, "knapsack|unbounded|dag|monge|sequence")->required();
  s->add_option("algo", solve.algo, "Solver name (depends on kind)")->required();
  s->add_option("file", solve.path, "Instance file")->required();
  s->add_flag("--check", solve.check, "Cross-check against the oracle");
  s->add_flag("--profile", solve.profile, "Print the full profile");
  s->add_flag("--lax", solve.lax, "Accept zero weights/values in knapsack input");
  s->add_option("--k", solve.k, "Hop budget (dag, monge) or subsequence length (sequence)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run solvers with oracle cross-checking");
  c->add_option("kind", check.kind, "knapsack|unbounded|dag|monge|sequence")->required();
  c->add_option("file", check.path, "Instance file")->required();
  c->add_option("--algo", check.algos, "Solvers to run (default: all for the kind)");
  c->add_flag("--lax", check.lax, "Accept zero weights/values in knapsack input");
  c->add_option("--k", check.k, "Hop budget or subsequence length");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  b->add_option("suite", bench.suite, joined(bench_suite_names()))->required();
  b->add_option("--seed", bench.opts.seed, "Instance seed")->capture_default_str();
  b->add_option("--out,-o", bench.out, "CSV path (default stdout)");
  b->add_option("--jobs,-j", bench.opts.jobs, "Concurrent cells")->capture_default_str();
  b->add_option("--repeats", bench.opts.repeats, "Timed runs per cell (median kept)")
      ->capture_default_str();
  b->add_flag("--quick", bench.opts.quick, "Shrunken sizes");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a seeded random instance");
  g->add_option("kind", gen.kind, "knapsack|unbounded|dag|monge|sequence")->required();
  g->add_option("--family", gen.family,
                "knapsack: uncorrelated|few-distinct|small-M|small-V; dag: semiorder|random; "
                "monge: squared|random");
  g->add_option("--seed", gen.seed, "SplitMix64 seed")->capture_default_str();
  g->add_option("--n", gen.n, "Items / nodes / sequence length")->capture_default_str();
  g->add_option("--T", gen.capacity, "Capacity")->capture_default_str();
  g->add_option("--max-weight", gen.max_weight, "Largest item weight")->capture_default_str();
  g->add_option("--max-value", gen.max_value, "Largest item value")->capture_default_str();
  g->add_option("--distinct", gen.distinct, "Distinct weights (few-distinct)")->capture_default_str();
  g->add_option("--k", gen.k, "Sequence k")->capture_default_str();
  g->add_option("--delta", gen.delta, "Sequence separation")->capture_default_str();
  g->add_option("--gap", gen.gap, "Semiorder gap")->capture_default_str();
  g->add_option("--reward", gen.reward, "Rewards / sequence values drawn from [-R, R]")
      ->capture_default_str();
  g->add_option("--perturb", gen.perturb, "Monge perturbation seed (0 = none)")
      ->capture_default_str();
  g->add_option("--out,-o", gen.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s) return do_solve(solve);
    if (*c) return do_check(check);
    if (*b) return do_bench(bench);
    if (*g) return do_gen(gen);
  } catch (const Error& e) {
    std::cerr << "capdp: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "capdp: internal error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
