#include "capdp/runner.hpp"

#include <algorithm>
#include <chrono>

namespace capdp {

const std::vector<std::string>& algorithms_for(ProblemKind kind) {
  static const std::vector<std::string> knapsack{"bellman", "td", "value-domain"};
  static const std::vector<std::string> unbounded{"dp", "doubling", "steinitz", "value-domain"};
  static const std::vector<std::string> dag{"dp", "lagrangian"};
  static const std::vector<std::string> monge{"dp", "best-path", "all-k", "all-targets"};
  static const std::vector<std::string> sequence{"dp", "separated"};
  switch (kind) {
    case ProblemKind::knapsack: return knapsack;
    case ProblemKind::unbounded: return unbounded;
    case ProblemKind::dag: return dag;
    case ProblemKind::monge: return monge;
    case ProblemKind::sequence: return sequence;
  }
  return knapsack;
}

std::string_view oracle_for(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::knapsack: return "bellman";
    default: return "dp";
  }
}

bool disagrees(const RunReport& r) {
  const std::string* a = r.find("agreement");
  return a && *a == "false";
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(double& ms, F&& f) {
  const auto start = Clock::now();
  auto result = f();
  ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

// Runs f, mapping Errc::infeasible onto BOTTOM.
template <class F>
ExtValue or_bottom(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != Errc::infeasible) throw;
    return kBottom;
  }
}

void add_check(RunReport& r, ProblemKind kind, bool agree) {
  r.add("oracle", std::string(oracle_for(kind)));
  r.add("agreement", std::string(agree ? "true" : "false"));
}

RunReport run_knapsack(const KnapsackInstance& inst, std::string_view algo,
                       const RunOptions& opts) {
  RunReport r;
  r.add("kind", std::string("knapsack"));
  r.add("solver", std::string(algo));
  r.add("n", static_cast<std::int64_t>(inst.input_count()));
  r.add("D", static_cast<std::int64_t>(inst.distinct_weights()));
  r.add("M", inst.max_weight());
  r.add("V", inst.max_value());
  r.add("T", inst.capacity());
  double ms = 0;
  if (algo == "value-domain") {
    const std::int64_t v = timed(ms, [&] { return solve_knapsack_value_domain(inst); });
    r.add("value", v);
    if (opts.check) {
      add_check(r, ProblemKind::knapsack, ExtValue(v) == solve_knapsack_bellman(inst).back());
    }
  } else {
    const ValueProfile p = timed(ms, [&] {
      return algo == "td" ? solve_knapsack_td(inst) : solve_knapsack_bellman(inst);
    });
    r.add("value", p.back());
    if (opts.profile) r.add_profile("profile", p);
    if (opts.check) add_check(r, ProblemKind::knapsack, p == solve_knapsack_bellman(inst));
  }
  r.wall_ms = ms;
  return r;
}

RunReport run_unbounded(const UnboundedInstance& inst, std::string_view algo,
                        const RunOptions& opts) {
  RunReport r;
  r.add("kind", std::string("unbounded"));
  r.add("solver", std::string(algo));
  r.add("n", static_cast<std::int64_t>(inst.items().size()));
  r.add("M", inst.max_weight());
  r.add("V", inst.max_value());
  r.add("T", inst.capacity());
  double ms = 0;
  if (algo == "dp") {
    const ValueProfile p = timed(ms, [&] { return solve_unbounded_dp(inst); });
    r.add("value", p.back());
    if (opts.profile) r.add_profile("profile", p);
    if (opts.check) add_check(r, ProblemKind::unbounded, true);
  } else if (algo == "doubling" && opts.profile) {
    const UnboundedWindow w = timed(ms, [&] { return solve_unbounded_window(inst); });
    r.add("value", *std::max_element(w.values.begin(), w.values.end()));
    r.add("window_first", w.first);
    r.add_profile("window", w.values);
    if (opts.check) {
      const ValueProfile p = solve_unbounded_dp(inst);
      const ValueProfile tail(p.begin() + w.first, p.end());
      add_check(r, ProblemKind::unbounded, tail == w.values);
    }
  } else {
    const std::int64_t v = timed(ms, [&] {
      if (algo == "doubling") return solve_unbounded_doubling(inst);
      if (algo == "steinitz") return solve_unbounded_steinitz(inst);
      return solve_unbounded_value_domain(inst);
    });
    r.add("value", v);
    if (opts.check) add_check(r, ProblemKind::unbounded, ExtValue(v) == solve_unbounded_dp(inst).back());
  }
  r.wall_ms = ms;
  return r;
}

RunReport run_dag(const DagProblem& p, std::string_view algo, const RunOptions& opts) {
  const NodeWeightedDag& g = p.graph;
  const std::int64_t k = opts.k.value_or(static_cast<std::int64_t>(g.size()) - 1);
  if (k < 0) throw Error(Errc::validation, "k must be nonnegative");
  RunReport r;
  r.add("kind", std::string("dag"));
  r.add("solver", std::string(algo));
  r.add("n", static_cast<std::int64_t>(g.size()));
  r.add("m", static_cast<std::int64_t>(g.edge_count()));
  r.add("s", static_cast<std::int64_t>(p.source));
  r.add("t", static_cast<std::int64_t>(p.target));
  r.add("k", k);
  auto oracle = [&] {
    return dp_hop_profile(g, p.source, p.target, static_cast<std::size_t>(k));
  };
  double ms = 0;
  ExtValue value;
  if (algo == "dp") {
    const HopProfile h = timed(ms, oracle);
    value = h.at_most().back();
    r.add("value", value);
    if (opts.profile) r.add_profile("profile", h.exact);
    if (opts.check) add_check(r, ProblemKind::dag, true);
  } else {
    std::optional<LagrangianResult> res;
    timed(ms, [&] {
      try {
        res = solve_lagrangian(g, p.source, p.target, k);
      } catch (const Error& e) {
        if (e.code() != Errc::infeasible) throw;
      }
      return 0;
    });
    value = res ? ExtValue(res->value) : kBottom;
    r.add("value", value);
    if (res) {
      r.add("lambda", res->certificate.lambda);
      r.add("probes", static_cast<std::int64_t>(res->probes));
    }
    if (opts.check) add_check(r, ProblemKind::dag, value == oracle().at_most().back());
  }
  r.wall_ms = ms;
  return r;
}

RunReport run_monge(const MongeProblem& p, std::string_view algo, const RunOptions& opts) {
  const MongeDagOracle& g = p.graph;
  const std::int64_t k = opts.k.value_or(static_cast<std::int64_t>(g.last()));
  if (k < 1) throw Error(Errc::validation, "k must be at least 1");
  const Node s = p.source;
  const Node t = p.target;
  RunReport r;
  r.add("kind", std::string("monge"));
  r.add("solver", std::string(algo));
  r.add("n", static_cast<std::int64_t>(g.node_count()));
  r.add("m", static_cast<std::int64_t>(g.edge_count()));
  r.add("s", static_cast<std::int64_t>(s));
  r.add("t", static_cast<std::int64_t>(t));
  r.add("k", k);
  r.add("complete", std::string(g.is_complete() ? "true" : "false"));
  auto at_k = [&](const ValueProfile& at_most) {
    return at_most[std::min<std::size_t>(static_cast<std::size_t>(k), at_most.size() - 1)];
  };
  auto oracle = [&] { return monge_dp_hop_profile(g, s, t, static_cast<std::size_t>(k)); };
  double ms = 0;
  if (algo == "dp") {
    const HopProfile h = timed(ms, oracle);
    r.add("value", h.at_most().back());
    if (opts.profile) r.add_profile("profile", h.exact);
    if (opts.check) add_check(r, ProblemKind::monge, true);
  } else if (algo == "best-path") {
    std::optional<LagrangianResult> res;
    timed(ms, [&] {
      try {
        res = monge_best_path(g, s, t, k);
      } catch (const Error& e) {
        if (e.code() != Errc::infeasible) throw;
      }
      return 0;
    });
    const ExtValue value = res ? ExtValue(res->value) : kBottom;
    r.add("value", value);
    if (res) {
      r.add("lambda", res->certificate.lambda);
      r.add("probes", static_cast<std::int64_t>(res->probes));
    }
    if (opts.check) add_check(r, ProblemKind::monge, value == oracle().at_most().back());
  } else if (algo == "all-k") {
    MongeStats stats;
    const HopProfile h = timed(ms, [&] { return monge_all_k(g, s, t, &stats); });
    r.add("value", at_k(h.at_most()));
    r.add("probes", static_cast<std::int64_t>(stats.probes));
    if (opts.profile) r.add_profile("profile", h.exact);
    if (opts.check) {
      add_check(r, ProblemKind::monge,
                h.exact == monge_dp_hop_profile(g, s, t, g.last()).exact);
    }
  } else {
    MongeStats stats;
    const ValueProfile v = timed(ms, [&] { return monge_all_targets(g, s, k, &stats); });
    r.add("value", v[t]);
    r.add("probes", static_cast<std::int64_t>(stats.probes));
    if (opts.profile) r.add_profile("targets", v);
    if (opts.check) add_check(r, ProblemKind::monge, v == monge_dp_all_targets(g, s, k));
  }
  r.wall_ms = ms;
  return r;
}

RunReport run_sequence(const SequenceProblem& p, std::string_view algo, const RunOptions& opts) {
  const std::int64_t k = opts.k.value_or(p.k);
  RunReport r;
  r.add("kind", std::string("sequence"));
  r.add("solver", std::string(algo));
  r.add("n", static_cast<std::int64_t>(p.values.size()));
  r.add("k", k);
  r.add("delta", p.delta);
  auto oracle = [&] {
    return or_bottom([&] { return ExtValue(sparse_separated_dp(p.values, k, p.delta)); });
  };
  double ms = 0;
  ExtValue value;
  if (algo == "dp") {
    value = timed(ms, oracle);
    r.add("value", value);
    if (opts.check) add_check(r, ProblemKind::sequence, true);
  } else {
    std::optional<LagrangianResult> res;
    timed(ms, [&] {
      try {
        res = solve_sparse_separated(p.values, k, p.delta);
      } catch (const Error& e) {
        if (e.code() != Errc::infeasible) throw;
      }
      return 0;
    });
    value = res ? ExtValue(res->value) : kBottom;
    r.add("value", value);
    if (res) r.add("probes", static_cast<std::int64_t>(res->probes));
    if (opts.check) add_check(r, ProblemKind::sequence, value == oracle());
  }
  r.wall_ms = ms;
  return r;
}

}  // namespace

RunReport run_instance(const InstanceFile& inst, std::string_view algo, const RunOptions& opts) {
  const auto& algos = algorithms_for(inst.kind);
  if (std::find(algos.begin(), algos.end(), algo) == algos.end()) {
    std::string list;
    for (const auto& a : algos) list += (list.empty() ? "" : "|") + a;
    throw Error(Errc::usage, "unknown algorithm '" + std::string(algo) + "' for " +
                                 std::string(to_string(inst.kind)) + " (expected " + list + ")");
  }
  switch (inst.kind) {
    case ProblemKind::knapsack:
      return run_knapsack(std::get<KnapsackInstance>(inst.body), algo, opts);
    case ProblemKind::unbounded:
      return run_unbounded(std::get<UnboundedInstance>(inst.body), algo, opts);
    case ProblemKind::dag:
      return run_dag(std::get<DagProblem>(inst.body), algo, opts);
    case ProblemKind::monge:
      return run_monge(std::get<MongeProblem>(inst.body), algo, opts);
    case ProblemKind::sequence:
      return run_sequence(std::get<SequenceProblem>(inst.body), algo, opts);
  }
  throw Error(Errc::usage, "unsupported kind");
}

}  // namespace capdp
