#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "capdp/dag.hpp"

namespace capdp {

struct WeightedEdge {
  Node from = 0;
  Node to = 0;
  std::int64_t weight = 0;
};

/// Edge-weighted DAG on nodes 0..last. Either complete (every i<j, weights
/// from a function) or an explicit edge list. A path's value is the sum of
/// its edge weights and its hop count is its edge count.
class MongeDagOracle {
 public:
  using WeightFn = std::function<std::int64_t(Node, Node)>;

  /// `bound` is max |weight|; 0 means scan all pairs to find it.
  static MongeDagOracle complete(Node last, WeightFn weight, std::int64_t bound = 0);
  static MongeDagOracle from_edges(Node last, std::vector<WeightedEdge> edges);

  Node last() const noexcept { return last_; }
  std::size_t node_count() const noexcept { return std::size_t{last_} + 1; }
  bool is_complete() const noexcept { return complete_; }
  std::int64_t bound() const noexcept { return bound_; }
  std::size_t edge_count() const noexcept;

  /// BOTTOM when the edge is absent.
  ExtValue weight(Node i, Node j) const;

  /// Calls f(i, w) for every edge i->j with lo <= i <= hi, i ascending.
  template <class F>
  void for_each_pred(Node j, Node lo, Node hi, F&& f) const {
    if (complete_) {
      const Node top = std::min<Node>(hi, j == 0 ? 0 : j - 1);
      if (j == 0) return;
      for (Node i = lo; i <= top; ++i) f(i, fn_(i, j));
      return;
    }
    const std::size_t end = in_offset_[j + 1];
    for (std::size_t e = lower_pred(j, lo); e < end && in_source_[e] <= hi; ++e) {
      f(in_source_[e], in_weight_[e]);
    }
  }

  /// Monge inequality on every adjacent quadruple whose four edges exist.
  bool verify_monge() const;

 private:
  std::size_t lower_pred(Node j, Node lo) const;

  Node last_ = 0;
  bool complete_ = false;
  std::int64_t bound_ = 1;
  WeightFn fn_;
  std::vector<std::size_t> in_offset_;
  std::vector<Node> in_source_;
  std::vector<std::int64_t> in_weight_;
};

/// Best s->t value with at most k edges. Bisects on a per-edge penalty;
/// exact when the hop profile is concave, which Monge weights guarantee.
LagrangianResult monge_best_path(const MongeDagOracle& g, Node s, Node t, std::int64_t k);

struct MongeStats {
  std::size_t probes = 0;
  std::size_t edge_scans = 0;
  std::size_t fallbacks = 0;  // restricted recursion abandoned for full probes
};

/// exact[k] for k = 0..last: best s->t value with exactly k edges. Parametric
/// divide and conquer over integer penalties; on complete graphs each probe
/// only scans predecessors between the optimal ones of its two bracketing
/// penalties.
HopProfile monge_all_k(const MongeDagOracle& g, Node s, Node t, MongeStats* stats = nullptr);

/// Entry t: best s->t value with at most k edges (0 for t = s, BOTTOM when
/// t < s or no such path).
ValueProfile monge_all_targets(const MongeDagOracle& g, Node s, std::int64_t k,
                               MongeStats* stats = nullptr);

/// Canonical penalized-optimal s->t path at penalty lambda: from each node,
/// the largest successor among optimal ones. Empty if t is unreachable.
std::vector<Node> monge_canonical_path(const MongeDagOracle& g, Node s, Node t,
                                       std::int64_t lambda);

/// O(K * m) references.
HopProfile monge_dp_hop_profile(const MongeDagOracle& g, Node s, Node t, std::size_t max_hops);
ValueProfile monge_dp_all_targets(const MongeDagOracle& g, Node s, std::int64_t k);

/// Complete graph on 0..n with weight(i,j) = -(i-j)^2. A nonzero seed adds a
/// Monge-safe perturbation: 2-D prefix sums of small nonnegative increments
/// plus per-row and per-column offsets.
MongeDagOracle gen_squared_monge(std::size_t n, std::uint64_t perturb_seed = 0);

}  // namespace capdp
