#include "capdp/generators.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace capdp {

KnapsackFamily parse_knapsack_family(std::string_view name) {
  if (name == "uncorrelated") return KnapsackFamily::uncorrelated;
  if (name == "few-distinct") return KnapsackFamily::few_distinct;
  if (name == "small-M") return KnapsackFamily::small_m;
  if (name == "small-V") return KnapsackFamily::small_v;
  throw Error(Errc::usage, "unknown knapsack family '" + std::string(name) + "'");
}

std::string_view to_string(KnapsackFamily f) {
  switch (f) {
    case KnapsackFamily::uncorrelated: return "uncorrelated";
    case KnapsackFamily::few_distinct: return "few-distinct";
    case KnapsackFamily::small_m: return "small-M";
    case KnapsackFamily::small_v: return "small-V";
  }
  return "?";
}

RawKnapsack gen_knapsack(KnapsackFamily family, const KnapsackParams& p, SplitMix64& rng) {
  if (p.max_weight < 1 || p.max_value < 1 || p.capacity < 0) {
    throw Error(Errc::validation, "generator bounds must be positive");
  }
  std::int64_t wmax = p.max_weight;
  std::int64_t vmax = p.max_value;
  if (family == KnapsackFamily::small_m) wmax = std::min<std::int64_t>(wmax, 16);
  if (family == KnapsackFamily::small_v) vmax = std::min<std::int64_t>(vmax, 16);
  std::vector<std::int64_t> palette;
  if (family == KnapsackFamily::few_distinct) {
    if (p.distinct < 1) throw Error(Errc::validation, "need at least one distinct weight");
    for (std::size_t i = 0; i < p.distinct; ++i) palette.push_back(rng.uniform(1, wmax));
  }
  RawKnapsack out;
  out.capacity = p.capacity;
  out.items.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    Item it;
    it.weight = palette.empty()
                    ? rng.uniform(1, wmax)
                    : palette[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(palette.size()) - 1))];
    it.value = rng.uniform(1, vmax);
    out.items.push_back(it);
  }
  return out;
}

RawKnapsack gen_unbounded(std::size_t n, std::int64_t max_weight, std::int64_t max_value,
                          std::int64_t capacity, SplitMix64& rng) {
  if (max_weight < 1 || max_value < 1 || capacity < 0) {
    throw Error(Errc::validation, "generator bounds must be positive");
  }
  RawKnapsack out;
  out.capacity = capacity;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < n; ++i) weights.push_back(rng.uniform(1, max_weight));
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  for (std::int64_t w : weights) out.items.push_back({w, rng.uniform(1, max_value)});
  return out;
}

std::vector<ExtValue> random_rewards(std::size_t n, std::int64_t lo, std::int64_t hi,
                                     SplitMix64& rng) {
  std::vector<ExtValue> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.emplace_back(rng.uniform(lo, hi));
  return r;
}

NodeWeightedDag gen_semiorder_dag(std::size_t n, std::int64_t spread, std::int64_t gap,
                                  std::vector<ExtValue> rewards, SplitMix64& rng) {
  if (gap < 1) throw Error(Errc::validation, "gap must be positive");
  std::vector<std::int64_t> x(n);
  for (auto& v : x) v = rng.uniform(0, spread);
  std::sort(x.begin(), x.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[j] - x[i] >= gap) edges.push_back({static_cast<Node>(i), static_cast<Node>(j)});
    }
  }
  return NodeWeightedDag(n, std::move(rewards), std::move(edges), true);
}

NodeWeightedDag gen_random_transitive_dag(std::size_t n, std::uint64_t num, std::uint64_t den,
                                          std::vector<ExtValue> rewards, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(num, den)) edges.push_back({static_cast<Node>(i), static_cast<Node>(j)});
    }
  }
  return transitive_closure(NodeWeightedDag(n, std::move(rewards), std::move(edges)));
}

std::vector<ExtValue> counterexample_rewards(std::size_t n, const PropertyPWitness& w,
                                             ExtValue others) {
  std::vector<ExtValue> r(n, others);
  r[w.u1] = 1000;
  r[w.u2] = 1000;
  r[w.u3] = 1000;
  r[w.v] = 1001;
  return r;
}

MongeDagOracle gen_random_monge(std::size_t n, SplitMix64& rng, std::int64_t max_alpha,
                                std::int64_t max_inc, std::int64_t max_offset) {
  const std::size_t m = n + 1;
  require_profile_entries(static_cast<std::int64_t>(m * m), "random monge");
  const std::int64_t alpha = rng.uniform(0, max_alpha);
  const std::int64_t beta = rng.uniform(-max_offset, max_offset);
  const std::int64_t inc = rng.uniform(0, max_inc);
  auto table = std::make_shared<std::vector<std::int64_t>>(m * m, 0);
  auto& s = *table;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t v = rng.uniform(0, inc);
      if (i > 0) v += s[(i - 1) * m + j];
      if (j > 0) v += s[i * m + j - 1];
      if (i > 0 && j > 0) v -= s[(i - 1) * m + j - 1];
      s[i * m + j] = v;
    }
  }
  auto offsets = std::make_shared<std::vector<std::int64_t>>(2 * m);
  for (auto& o : *offsets) o = rng.uniform(-max_offset, max_offset);
  return MongeDagOracle::complete(
      static_cast<Node>(n), [table, offsets, m, alpha, beta](Node i, Node j) {
        const std::int64_t d = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
        return -alpha * d * d - beta * d + (*table)[i * m + j] + (*offsets)[i] +
               (*offsets)[m + j];
      });
}

std::vector<std::int64_t> gen_sequence(std::size_t n, std::int64_t lo, std::int64_t hi,
                                       SplitMix64& rng) {
  std::vector<std::int64_t> a(n);
  for (auto& v : a) v = rng.uniform(lo, hi);
  return a;
}

}  // namespace capdp
