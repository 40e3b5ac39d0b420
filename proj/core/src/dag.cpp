#include "capdp/dag.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace capdp {

namespace {

// Row-per-node bitsets, used by the transitivity and Property P checks.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (row(r)[c / 64] >> (c % 64)) & 1U;
  }
  std::size_t words() const { return words_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

BitMatrix out_matrix(const NodeWeightedDag& g) {
  BitMatrix m(g.size());
  for (Node u = 0; u < g.size(); ++u) {
    for (Node v : g.out(u)) m.set(u, v);
  }
  return m;
}

BitMatrix in_matrix(const NodeWeightedDag& g) {
  BitMatrix m(g.size());
  for (Node v = 0; v < g.size(); ++v) {
    for (Node u : g.in(v)) m.set(v, u);
  }
  return m;
}

void require_node(const NodeWeightedDag& g, Node v, const char* role) {
  if (v >= g.size()) {
    throw Error(Errc::validation, std::string(role) + " node " + std::to_string(v) +
                                      " out of range (n=" + std::to_string(g.size()) + ")");
  }
}

}  // namespace

NodeWeightedDag::NodeWeightedDag(std::size_t n, std::vector<ExtValue> rewards,
                                 std::vector<Edge> edges, bool transitive,
                                 std::vector<std::uint8_t> hop_cost)
    : rewards_(std::move(rewards)), hop_cost_(std::move(hop_cost)), transitive_(transitive) {
  if (n > std::size_t{0xFFFFFFF0}) throw Error(Errc::validation, "too many nodes");
  if (rewards_.size() != n) {
    throw Error(Errc::validation, "expected " + std::to_string(n) + " rewards, got " +
                                      std::to_string(rewards_.size()));
  }
  if (hop_cost_.empty()) hop_cost_.assign(n, 1);
  if (hop_cost_.size() != n) throw Error(Errc::validation, "hop cost list has wrong length");
  for (std::uint8_t c : hop_cost_) {
    if (c > 1) throw Error(Errc::validation, "hop costs must be 0 or 1");
  }
  std::int64_t bound = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (rewards_[v].is_top()) {
      throw Error(Errc::validation, "node " + std::to_string(v) + " has reward +inf");
    }
    if (rewards_[v].is_finite()) {
      const std::int64_t r = rewards_[v].value();
      bound = std::max(bound, r < 0 ? -r : r);
    }
  }
  if (static_cast<__int128>(n) * bound > kMagnitudeBudget) {
    throw Error(Errc::overflow, "n*max|reward| exceeds 2^55");
  }
  reward_bound_ = bound;

  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw Error(Errc::validation, "edge " + std::to_string(e.from) + "->" +
                                        std::to_string(e.to) + " has an endpoint out of range");
    }
    if (e.from >= e.to) {
      throw Error(Errc::validation, "edge " + std::to_string(e.from) + "->" +
                                        std::to_string(e.to) +
                                        " does not follow the topological numbering");
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.from != b.from ? a.from < b.from : a.to < b.to; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++out_offset_[e.from + 1];
    ++in_offset_[e.to + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  out_targets_.resize(edges.size());
  in_sources_.resize(edges.size());
  std::vector<std::size_t> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out_targets_[i] = edges[i].to;
    in_sources_[fill[edges[i].to]++] = edges[i].from;  // sources stay sorted
  }
}

bool NodeWeightedDag::has_edge(Node u, Node v) const {
  if (u >= size() || v >= size()) return false;
  const auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Edge> NodeWeightedDag::edges() const {
  std::vector<Edge> out_edges;
  out_edges.reserve(edge_count());
  for (Node u = 0; u < size(); ++u) {
    for (Node v : out(u)) out_edges.push_back({u, v});
  }
  return out_edges;
}

bool NodeWeightedDag::verify_transitive() const {
  const BitMatrix m = out_matrix(*this);
  for (Node u = 0; u < size(); ++u) {
    const std::uint64_t* ru = m.row(u);
    for (Node v : out(u)) {
      const std::uint64_t* rv = m.row(v);
      for (std::size_t w = 0; w < m.words(); ++w) {
        if (rv[w] & ~ru[w]) return false;
      }
    }
  }
  return true;
}

NodeWeightedDag NodeWeightedDag::with_rewards(std::vector<ExtValue> rewards) const {
  return NodeWeightedDag(size(), std::move(rewards), edges(), transitive_, hop_cost_);
}

NodeWeightedDag transitive_closure(const NodeWeightedDag& g) {
  const std::size_t n = g.size();
  BitMatrix reach(n);
  for (std::size_t i = n; i-- > 0;) {
    const Node u = static_cast<Node>(i);
    std::uint64_t* ru = reach.row(u);
    for (Node v : g.out(u)) {
      reach.set(u, v);
      const std::uint64_t* rv = reach.row(v);
      for (std::size_t w = 0; w < reach.words(); ++w) ru[w] |= rv[w];
    }
  }
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    const std::uint64_t* ru = reach.row(u);
    for (std::size_t w = 0; w < reach.words(); ++w) {
      std::uint64_t bits = ru[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        edges.push_back({u, static_cast<Node>(w * 64 + static_cast<std::size_t>(b))});
      }
    }
  }
  return NodeWeightedDag(n, g.rewards(), std::move(edges), true, g.hop_costs());
}

NodeWeightedDag with_universal_endpoints(const NodeWeightedDag& g) {
  const std::size_t n = g.size();
  std::vector<ExtValue> rewards;
  rewards.reserve(n + 2);
  rewards.push_back(0);
  rewards.insert(rewards.end(), g.rewards().begin(), g.rewards().end());
  rewards.push_back(0);
  std::vector<std::uint8_t> cost;
  cost.reserve(n + 2);
  cost.push_back(1);
  cost.insert(cost.end(), g.hop_costs().begin(), g.hop_costs().end());
  cost.push_back(0);

  const Node sink = static_cast<Node>(n + 1);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 2 * n + 1);
  for (const Edge& e : g.edges()) edges.push_back({e.from + 1, e.to + 1});
  for (Node v = 1; v <= n; ++v) {
    edges.push_back({0, v});
    edges.push_back({v, sink});
  }
  edges.push_back({0, sink});
  return NodeWeightedDag(n + 2, std::move(rewards), std::move(edges), g.transitive(),
                         std::move(cost));
}

NodeWeightedDag separated_dense_dag(std::size_t n, std::size_t delta,
                                    std::vector<ExtValue> rewards) {
  if (delta < 1) throw Error(Errc::validation, "delta must be positive");
  if (rewards.empty()) rewards.assign(n, 0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + delta; j < n; ++j) {
      edges.push_back({static_cast<Node>(i), static_cast<Node>(j)});
    }
  }
  return NodeWeightedDag(n, std::move(rewards), std::move(edges), true);
}

HopProfile dp_hop_profile(const NodeWeightedDag& g, Node s, Node t, std::size_t max_hops) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  HopProfile out{ValueProfile(max_hops + 1, kBottom)};
  if (t < s) return out;
  std::size_t counted = 0;
  for (Node v = s + 1; v <= t; ++v) counted += g.hop_cost(v);
  const std::size_t K = std::min(max_hops, counted);
  const std::size_t span = t - s + 1;
  require_profile_entries(static_cast<std::int64_t>(span * (K + 1)), "hop-profile dp");

  constexpr std::int64_t kNone = INT64_MIN;
  std::vector<std::int64_t> best(span * (K + 1), kNone);
  auto at = [&](Node v, std::size_t h) -> std::int64_t& { return best[(v - s) * (K + 1) + h]; };
  at(s, 0) = 0;
  for (Node v = s + 1; v <= t; ++v) {
    const ExtValue r = g.reward(v);
    if (r.is_bottom()) continue;
    const std::int64_t rv = r.value();
    const std::size_t c = g.hop_cost(v);
    for (Node u : g.in(v)) {
      if (u < s) continue;
      for (std::size_t h = c; h <= K; ++h) {
        const std::int64_t prev = at(u, h - c);
        if (prev == kNone) continue;
        at(v, h) = std::max(at(v, h), prev + rv);
      }
    }
  }
  for (std::size_t h = 0; h <= K; ++h) {
    if (at(t, h) != kNone) out.exact[h] = at(t, h);
  }
  return out;
}

PropertyPWitness check_property_p(const NodeWeightedDag& g) {
  if (!g.transitive()) {
    throw Error(Errc::not_transitive, "Property P is only checked on graphs flagged transitive");
  }
  const std::size_t n = g.size();
  const BitMatrix out_m = out_matrix(g);
  const BitMatrix in_m = in_matrix(g);
  const std::size_t words = out_m.words();
  for (Node u1 = 0; u1 < n; ++u1) {
    const std::uint64_t* o = out_m.row(u1);
    for (Node u3 : g.out(u1)) {
      const std::uint64_t* i = in_m.row(u3);
      std::size_t mid_word = words;
      for (std::size_t w = 0; w < words; ++w) {
        if (o[w] & i[w]) {
          mid_word = w;
          break;
        }
      }
      if (mid_word == words) continue;  // u1->u3 is not the shortcut of any 2-edge path
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t covered = o[w] | i[w];
        if (u1 / 64 == w) covered |= std::uint64_t{1} << (u1 % 64);
        if (u3 / 64 == w) covered |= std::uint64_t{1} << (u3 % 64);
        std::uint64_t missing = ~covered;
        if (w == words - 1 && n % 64 != 0) missing &= (std::uint64_t{1} << (n % 64)) - 1;
        if (!missing) continue;
        PropertyPWitness wit;
        wit.holds = false;
        wit.u1 = u1;
        wit.u3 = u3;
        wit.u2 = static_cast<Node>(mid_word * 64 +
                                   static_cast<std::size_t>(std::countr_zero(o[mid_word] & i[mid_word])));
        wit.v = static_cast<Node>(w * 64 + static_cast<std::size_t>(std::countr_zero(missing)));
        if (!g.has_edge(wit.u1, wit.u2) || !g.has_edge(wit.u2, wit.u3) ||
            g.has_edge(wit.u1, wit.v) || g.has_edge(wit.v, wit.u3)) {
          throw std::logic_error("Property P witness failed verification");
        }
        return wit;
      }
    }
  }
  return {};
}

ProbeResult node_penalized_probe(const NodeWeightedDag& g, Node s, Node t, std::int64_t lambda) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  if (t < s) return {};
  const std::size_t span = t - s + 1;
  std::vector<__int128> val(span);
  std::vector<std::int64_t> kmin(span), kmax(span);
  std::vector<std::uint8_t> reach(span, 0);
  reach[0] = 1;
  for (Node v = s + 1; v <= t; ++v) {
    const ExtValue r = g.reward(v);
    if (r.is_bottom()) continue;
    bool found = false;
    __int128 best = 0;
    std::int64_t lo = 0, hi = 0;
    for (Node u : g.in(v)) {
      if (u < s) continue;
      const std::size_t iu = u - s;
      if (!reach[iu]) continue;
      if (!found || val[iu] > best) {
        found = true;
        best = val[iu];
        lo = kmin[iu];
        hi = kmax[iu];
      } else if (val[iu] == best) {
        lo = std::min(lo, kmin[iu]);
        hi = std::max(hi, kmax[iu]);
      }
    }
    if (!found) continue;
    const std::size_t iv = v - s;
    const std::int64_t c = g.hop_cost(v);
    reach[iv] = 1;
    val[iv] = best + r.value() - static_cast<__int128>(lambda) * c;
    kmin[iv] = lo + c;
    kmax[iv] = hi + c;
  }
  const std::size_t it = t - s;
  if (!reach[it]) return {};
  return {true, val[it], kmin[it], kmax[it]};
}

std::int64_t lagrangian_bound(const NodeWeightedDag& g) {
  return 2 * static_cast<std::int64_t>(g.size()) * g.reward_bound() + 1;
}

LagrangianResult solve_lagrangian(const NodeWeightedDag& g, Node s, Node t, std::int64_t k) {
  if (k < 0) throw Error(Errc::validation, "hop budget must be nonnegative");
  auto probe = [&](std::int64_t lambda) { return node_penalized_probe(g, s, t, lambda); };
  return lagrangian_at_most(probe, k, lagrangian_bound(g));
}

LagrangianResult solve_lagrangian_exact(const NodeWeightedDag& g, Node s, Node t,
                                        std::int64_t k) {
  if (k < 0) throw Error(Errc::validation, "hop count must be nonnegative");
  auto probe = [&](std::int64_t lambda) { return node_penalized_probe(g, s, t, lambda); };
  const std::int64_t b = lagrangian_bound(g);
  return lagrangian_exact(probe, k, -b, b);
}

NodeWeightedDag separated_sparse_dag(std::span<const std::int64_t> a, std::size_t delta) {
  if (delta < 1) throw Error(Errc::validation, "delta must be positive");
  const std::size_t n = a.size();
  const std::size_t nodes = 2 * n + 2;
  const Node sink = static_cast<Node>(2 * n + 1);
  auto u = [](std::size_t i) { return static_cast<Node>(2 * i + 1); };
  auto v = [](std::size_t i) { return static_cast<Node>(2 * i + 2); };

  std::vector<ExtValue> rewards(nodes, 0);
  std::vector<std::uint8_t> cost(nodes, 0);
  std::vector<Edge> edges;
  edges.reserve(5 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rewards[u(i)] = a[i];
    cost[u(i)] = 1;
    edges.push_back({0, u(i)});
    edges.push_back({u(i), v(i)});
    edges.push_back({u(i), sink});
    if (i + 1 < n) edges.push_back({v(i), v(i + 1)});
    if (i + delta < n) edges.push_back({v(i), u(i + delta)});
  }
  return NodeWeightedDag(nodes, std::move(rewards), std::move(edges), false, std::move(cost));
}

namespace {

void check_separated_args(std::size_t n, std::int64_t k, std::int64_t delta) {
  if (delta < 1) throw Error(Errc::validation, "delta must be positive");
  if (k < 0) throw Error(Errc::validation, "k must be nonnegative");
  if (k >= 1 && (static_cast<__int128>(k - 1) * delta > static_cast<__int128>(n) - 1)) {
    throw Error(Errc::infeasible, "no " + std::to_string(k) + " indices of " + std::to_string(n) +
                                      " are pairwise " + std::to_string(delta) + " apart");
  }
}

}  // namespace

LagrangianResult solve_sparse_separated(std::span<const std::int64_t> a, std::int64_t k,
                                        std::int64_t delta) {
  check_separated_args(a.size(), k, delta);
  if (k == 0) return {};
  const NodeWeightedDag g = separated_sparse_dag(a, static_cast<std::size_t>(delta));
  const Node sink = static_cast<Node>(g.size() - 1);
  auto probe = [&](std::int64_t lambda) { return node_penalized_probe(g, 0, sink, lambda); };
  const std::int64_t b = lagrangian_bound(g);
  return lagrangian_exact(probe, k, -b, b);
}

std::int64_t sparse_separated_dp(std::span<const std::int64_t> a, std::int64_t k,
                                 std::int64_t delta) {
  check_separated_args(a.size(), k, delta);
  if (k == 0) return 0;
  const std::size_t n = a.size();
  const std::size_t K = static_cast<std::size_t>(k);
  const std::size_t d = static_cast<std::size_t>(delta);
  require_profile_entries(static_cast<std::int64_t>(n), "separated dp");
  constexpr std::int64_t kNone = INT64_MIN;
  // prev[i]: best with j-1 picks, all at indices <= i. Rolled over j.
  std::vector<std::int64_t> prev(n, 0), cur(n, kNone);
  for (std::size_t j = 1; j <= K; ++j) {
    std::int64_t run = kNone;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t here = kNone;
      if (j == 1) {
        here = a[i];
      } else if (i >= d && prev[i - d] != kNone) {
        here = prev[i - d] + a[i];
      }
      run = std::max(run, here);
      cur[i] = run;
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

KnapsackDag knapsack_to_dag(const KnapsackInstance& inst) {
  const auto& items = inst.items();
  if (items.size() > kGadgetMaxItems || inst.capacity() > kGadgetMaxCapacity ||
      inst.max_weight() > kGadgetMaxWeight) {
    if (!guard_override_from_env()) {
      throw Error(Errc::scale_limit,
                  "gadget limited to n<=" + std::to_string(kGadgetMaxItems) +
                      ", T<=" + std::to_string(kGadgetMaxCapacity) +
                      ", w<=" + std::to_string(kGadgetMaxWeight));
    }
  }
  const std::int64_t n = static_cast<std::int64_t>(items.size());
  KnapsackDag out;
  out.value_offset = inst.offset();
  out.b = n * inst.max_weight() * inst.max_value();
  std::int64_t scale = 1;
  for (const Item& it : items) scale = std::lcm(scale, it.weight + 1);
  out.scale = scale;
  out.hop_budget = 2 * n + inst.capacity();
  out.offset = n * out.b * scale;

  std::vector<ExtValue> rewards{0};
  std::vector<Edge> edges;
  Node junction = 0;
  for (const Item& it : items) {
    const Node skip = static_cast<Node>(rewards.size());
    rewards.push_back(out.b * scale);
    const Node first_take = static_cast<Node>(rewards.size());
    const std::int64_t per = (out.b + it.value) * (scale / (it.weight + 1));
    for (std::int64_t j = 0; j <= it.weight; ++j) rewards.push_back(per);
    const Node next = static_cast<Node>(rewards.size());
    rewards.push_back(0);
    edges.push_back({junction, skip});
    edges.push_back({skip, next});
    edges.push_back({junction, first_take});
    for (Node y = first_take; y + 1 < next; ++y) edges.push_back({y, y + 1});
    edges.push_back({static_cast<Node>(next - 1), next});
    junction = next;
  }
  out.source = 0;
  out.sink = junction;
  const std::size_t count = rewards.size();
  out.graph = NodeWeightedDag(count, std::move(rewards), std::move(edges));
  return out;
}

}  // namespace capdp
