#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "capdp/dag.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/rng.hpp"

namespace capdp {

struct RawKnapsack {
  std::vector<Item> items;
  std::int64_t capacity = 0;
};

/// Pisinger-style families:
///   uncorrelated  w in [1, W], v in [1, V]
///   few-distinct  weights drawn from D random values in [1, W]
///   small-M       w in [1, min(W, 16)]
///   small-V       v in [1, min(V, 16)]
enum class KnapsackFamily { uncorrelated, few_distinct, small_m, small_v };

KnapsackFamily parse_knapsack_family(std::string_view name);
std::string_view to_string(KnapsackFamily f);

struct KnapsackParams {
  std::size_t n = 100;
  std::int64_t capacity = 1000;
  std::int64_t max_weight = 100;
  std::int64_t max_value = 100;
  std::size_t distinct = 8;  // few-distinct only
};

RawKnapsack gen_knapsack(KnapsackFamily family, const KnapsackParams& p, SplitMix64& rng);

/// Unbounded: up to n items with distinct weights in [1, M], values in [1, V].
RawKnapsack gen_unbounded(std::size_t n, std::int64_t max_weight, std::int64_t max_value,
                          std::int64_t capacity, SplitMix64& rng);

std::vector<ExtValue> random_rewards(std::size_t n, std::int64_t lo, std::int64_t hi,
                                     SplitMix64& rng);

/// Semiorder DAG: nodes get sorted positions x_i in [0, spread] and i->j iff
/// x_j - x_i >= gap. Always transitive and satisfies Property P.
NodeWeightedDag gen_semiorder_dag(std::size_t n, std::int64_t spread, std::int64_t gap,
                                  std::vector<ExtValue> rewards, SplitMix64& rng);

/// Transitive closure of a random DAG with edge probability num/den.
NodeWeightedDag gen_random_transitive_dag(std::size_t n, std::uint64_t num, std::uint64_t den,
                                          std::vector<ExtValue> rewards, SplitMix64& rng);

/// Rewards that expose a Property P failure: the witness path nodes get
/// 1000, the witness v gets 1001 and every other node `others`.
std::vector<ExtValue> counterexample_rewards(std::size_t n, const PropertyPWitness& w,
                                             ExtValue others);

/// Complete Monge DAG on 0..n: -alpha*(j-i)^2 - beta*(j-i) plus a 2-D prefix
/// sum of increments in [0, inc] plus row/column offsets in [-off, off].
MongeDagOracle gen_random_monge(std::size_t n, SplitMix64& rng, std::int64_t max_alpha = 3,
                                std::int64_t max_inc = 4, std::int64_t max_offset = 20);

std::vector<std::int64_t> gen_sequence(std::size_t n, std::int64_t lo, std::int64_t hi,
                                       SplitMix64& rng);

}  // namespace capdp
