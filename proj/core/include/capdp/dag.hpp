#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "capdp/knapsack.hpp"
#include "capdp/lagrangian.hpp"
#include "capdp/sequences.hpp"

namespace capdp {

using Node = std::uint32_t;

struct Edge {
  Node from = 0;
  Node to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// DAG whose node indices are a topological order (every edge goes from a
/// smaller to a larger index). A path collects the reward of every node after
/// its first one. Its hop count is the sum of the per-node hop costs over the
/// same nodes; with the default cost of 1 everywhere that is the edge count.
/// Nodes with cost 0 are pass-through junctions.
class NodeWeightedDag {
 public:
  NodeWeightedDag() = default;
  NodeWeightedDag(std::size_t n, std::vector<ExtValue> rewards, std::vector<Edge> edges,
                  bool transitive = false, std::vector<std::uint8_t> hop_cost = {});

  std::size_t size() const noexcept { return rewards_.size(); }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }
  ExtValue reward(Node v) const { return rewards_[v]; }
  const std::vector<ExtValue>& rewards() const noexcept { return rewards_; }
  std::uint8_t hop_cost(Node v) const { return hop_cost_[v]; }
  const std::vector<std::uint8_t>& hop_costs() const noexcept { return hop_cost_; }
  bool transitive() const noexcept { return transitive_; }

  std::span<const Node> out(Node u) const {
    return {out_targets_.data() + out_offset_[u], out_targets_.data() + out_offset_[u + 1]};
  }
  std::span<const Node> in(Node v) const {
    return {in_sources_.data() + in_offset_[v], in_sources_.data() + in_offset_[v + 1]};
  }
  bool has_edge(Node u, Node v) const;
  std::vector<Edge> edges() const;

  /// Largest |finite reward|, at least 1.
  std::int64_t reward_bound() const noexcept { return reward_bound_; }

  /// Checks u->v->w implies u->w. O(n * m / 64).
  bool verify_transitive() const;

  NodeWeightedDag with_rewards(std::vector<ExtValue> rewards) const;

 private:
  std::vector<ExtValue> rewards_;
  std::vector<std::uint8_t> hop_cost_;
  std::vector<std::size_t> out_offset_, in_offset_;
  std::vector<Node> out_targets_, in_sources_;
  std::int64_t reward_bound_ = 1;
  bool transitive_ = false;
};

/// Adds every implied edge and sets the transitivity flag.
NodeWeightedDag transitive_closure(const NodeWeightedDag& g);

/// Prepends a source (index 0) with edges to every node and appends a sink
/// (index n+1) reached from every node, plus source->sink. Both carry reward
/// 0; the sink costs no hop, so a path's hop count is the number of original
/// nodes it visits. Transitivity and Property P are preserved.
NodeWeightedDag with_universal_endpoints(const NodeWeightedDag& g);

/// Edge i->j iff j - i >= delta, on n nodes.
NodeWeightedDag separated_dense_dag(std::size_t n, std::size_t delta,
                                    std::vector<ExtValue> rewards = {});

/// exact[k] = best s->t path reward using exactly k hops, BOTTOM if none.
struct HopProfile {
  ValueProfile exact;

  ValueProfile at_most() const { return prefix_max(exact); }
};

/// Exact dynamic program over (node, hops), O(K * m). Entries beyond the
/// longest possible path are BOTTOM.
HopProfile dp_hop_profile(const NodeWeightedDag& g, Node s, Node t, std::size_t max_hops);

/// For every 2-edge path u1->u2->u3 and every node v, either u1->v or v->u3.
struct PropertyPWitness {
  bool holds = true;
  Node u1 = 0, u2 = 0, u3 = 0, v = 0;
};

/// Requires the transitivity flag (Errc::not_transitive otherwise).
PropertyPWitness check_property_p(const NodeWeightedDag& g);

/// Best penalized s->t value with every counted node's reward reduced by
/// lambda, tracking the fewest and most hops among the optima. O(n + m).
ProbeResult node_penalized_probe(const NodeWeightedDag& g, Node s, Node t, std::int64_t lambda);

/// Penalty search interval [-B, B] with B = 2 n M + 1.
std::int64_t lagrangian_bound(const NodeWeightedDag& g);

/// Best s->t reward over paths with at most k hops, by bisection on the hop
/// penalty. Exact when the hop profile is concave (e.g. Property P holds).
LagrangianResult solve_lagrangian(const NodeWeightedDag& g, Node s, Node t, std::int64_t k);

/// Same search for exactly k hops.
LagrangianResult solve_lagrangian_exact(const NodeWeightedDag& g, Node s, Node t,
                                        std::int64_t k);

/// Layout of the sparse graph for k-sparse delta-separated subsequences:
/// source 0, u_i = 2i+1 (picks a[i], hop cost 1), v_i = 2i+2 (pass-through),
/// sink 2n+1. Edges s->u_i, u_i->v_i, v_i->v_{i+1}, v_i->u_{i+delta},
/// u_i->t, so a path's picks are exactly the delta-separated index sets.
NodeWeightedDag separated_sparse_dag(std::span<const std::int64_t> a, std::size_t delta);

/// Max sum of exactly k entries with pairwise index gaps >= delta, through
/// the sparse graph and an exact Lagrangian search. O(n log(n max|a|)).
LagrangianResult solve_sparse_separated(std::span<const std::int64_t> a, std::int64_t k,
                                        std::int64_t delta);

/// Direct O(n k) reference.
std::int64_t sparse_separated_dp(std::span<const std::int64_t> a, std::int64_t k,
                                 std::int64_t delta);

/// Knapsack as a serial chain of item gadgets between junctions. Gadget i
/// offers a "skip" path through one node of reward b and a "take" path
/// through w_i+1 nodes of reward (b+v_i)/(w_i+1), b = n * w_max * v_max.
/// Rewards are multiplied by `scale` (lcm of all w_i+1) to stay integral.
struct KnapsackDag {
  NodeWeightedDag graph;
  Node source = 0;
  Node sink = 0;
  std::int64_t hop_budget = 0;  // 2n + T edges
  std::int64_t scale = 1;
  std::int64_t b = 0;
  std::int64_t offset = 0;      // n * b * scale
  std::int64_t value_offset = 0;  // zero-weight item values (lax instances)
};

inline constexpr std::size_t kGadgetMaxItems = 5;
inline constexpr std::int64_t kGadgetMaxCapacity = 8;
inline constexpr std::int64_t kGadgetMaxWeight = 4;

KnapsackDag knapsack_to_dag(const KnapsackInstance& inst);

}  // namespace capdp
