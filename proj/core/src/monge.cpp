#include "capdp/monge.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "capdp/rng.hpp"

namespace capdp {

namespace {

void require_bound(std::size_t nodes, std::int64_t bound) {
  if (static_cast<__int128>(nodes) * bound > kMagnitudeBudget) {
    throw Error(Errc::overflow, "(n+1)*max|weight| exceeds 2^55");
  }
}

void require_node(const MongeDagOracle& g, Node v, const char* role) {
  if (v > g.last()) {
    throw Error(Errc::validation, std::string(role) + " node " + std::to_string(v) +
                                      " out of range (last=" + std::to_string(g.last()) + ")");
  }
}

}  // namespace

MongeDagOracle MongeDagOracle::complete(Node last, WeightFn weight, std::int64_t bound) {
  if (!weight) throw Error(Errc::validation, "missing weight function");
  MongeDagOracle g;
  g.last_ = last;
  g.complete_ = true;
  g.fn_ = std::move(weight);
  if (bound <= 0) {
    bound = 1;
    for (Node j = 1; j <= last; ++j) {
      for (Node i = 0; i < j; ++i) {
        const std::int64_t w = g.fn_(i, j);
        if (w > ExtValue::kLimit || w < -ExtValue::kLimit) {
          throw Error(Errc::overflow, "edge weight out of range");
        }
        bound = std::max(bound, w < 0 ? -w : w);
      }
    }
  }
  g.bound_ = bound;
  require_bound(g.node_count(), bound);
  return g;
}

MongeDagOracle MongeDagOracle::from_edges(Node last, std::vector<WeightedEdge> edges) {
  MongeDagOracle g;
  g.last_ = last;
  std::int64_t bound = 1;
  for (const WeightedEdge& e : edges) {
    if (e.to > last || e.from >= e.to) {
      throw Error(Errc::validation, "edge " + std::to_string(e.from) + "->" +
                                        std::to_string(e.to) + " is out of range or backwards");
    }
    if (e.weight > ExtValue::kLimit || e.weight < -ExtValue::kLimit) {
      throw Error(Errc::overflow, "edge weight out of range");
    }
    bound = std::max(bound, e.weight < 0 ? -e.weight : e.weight);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.to != b.to ? a.to < b.to : a.from < b.from;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].to == edges[i - 1].to && edges[i].from == edges[i - 1].from) {
      throw Error(Errc::validation, "duplicate edge " + std::to_string(edges[i].from) + "->" +
                                        std::to_string(edges[i].to));
    }
  }
  g.in_offset_.assign(g.node_count() + 1, 0);
  for (const WeightedEdge& e : edges) ++g.in_offset_[e.to + 1];
  for (std::size_t j = 0; j < g.node_count(); ++j) g.in_offset_[j + 1] += g.in_offset_[j];
  for (const WeightedEdge& e : edges) {
    g.in_source_.push_back(e.from);
    g.in_weight_.push_back(e.weight);
  }
  g.bound_ = bound;
  require_bound(g.node_count(), bound);
  return g;
}

std::size_t MongeDagOracle::edge_count() const noexcept {
  if (complete_) return static_cast<std::size_t>(last_) * (static_cast<std::size_t>(last_) + 1) / 2;
  return in_source_.size();
}

std::size_t MongeDagOracle::lower_pred(Node j, Node lo) const {
  const auto first = in_source_.begin() + static_cast<std::ptrdiff_t>(in_offset_[j]);
  const auto last = in_source_.begin() + static_cast<std::ptrdiff_t>(in_offset_[j + 1]);
  return static_cast<std::size_t>(std::lower_bound(first, last, lo) - in_source_.begin());
}

ExtValue MongeDagOracle::weight(Node i, Node j) const {
  if (i >= j || j > last_) return kBottom;
  if (complete_) return fn_(i, j);
  const std::size_t e = lower_pred(j, i);
  if (e < in_offset_[j + 1] && in_source_[e] == i) return in_weight_[e];
  return kBottom;
}

bool MongeDagOracle::verify_monge() const {
  for (Node i = 0; i + 2 <= last_; ++i) {
    for (Node j = i + 2; j < last_; ++j) {
      const ExtValue a = weight(i, j), b = weight(i + 1, j + 1);
      const ExtValue c = weight(i + 1, j), d = weight(i, j + 1);
      if (!a.is_finite() || !b.is_finite() || !c.is_finite() || !d.is_finite()) continue;
      if (static_cast<__int128>(a.value()) + b.value() <
          static_cast<__int128>(c.value()) + d.value()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Penalized longest paths from s to every node in [s, last]: maximize
// sum(w) - lambda * edges. Offsets are relative to s.
struct EdgeProbe {
  Node s = 0;
  Node last = 0;
  std::vector<__int128> val;
  std::vector<std::int64_t> kmin, kmax;
  std::vector<Node> pmin, pmax;  // smallest / largest optimal predecessor
  std::vector<std::uint8_t> reach;

  bool reachable(Node v) const { return v >= s && v <= last && reach[v - s]; }
  ProbeResult result(Node t) const {
    if (!reachable(t)) return {};
    const std::size_t i = t - s;
    return {true, val[i], kmin[i], kmax[i]};
  }
};

// `left` / `right` are probes at smaller / larger penalties. Optimal
// predecessors move toward s as the penalty grows, so at a penalty between
// the two node j only needs predecessors in [right.pmin(j), left.pmax(j)].
EdgeProbe edge_probe(const MongeDagOracle& g, Node s, Node last, std::int64_t lambda,
                     const EdgeProbe* left, const EdgeProbe* right, MongeStats* stats) {
  EdgeProbe p;
  p.s = s;
  p.last = last;
  const std::size_t span = last - s + 1;
  p.val.assign(span, 0);
  p.kmin.assign(span, 0);
  p.kmax.assign(span, 0);
  p.pmin.assign(span, s);
  p.pmax.assign(span, s);
  p.reach.assign(span, 0);
  p.reach[0] = 1;
  std::size_t scans = 0;
  for (Node j = s + 1; j <= last; ++j) {
    Node lo = s;
    Node hi = j - 1;
    if (left && right && left->reachable(j) && right->reachable(j)) {
      const Node a = right->pmin[j - s];
      const Node b = left->pmax[j - s];
      if (a <= b) {
        lo = a;
        hi = b;
      }
    }
    bool found = false;
    __int128 best = 0;
    std::int64_t kl = 0, kh = 0;
    Node pl = 0, ph = 0;
    g.for_each_pred(j, lo, hi, [&](Node i, std::int64_t w) {
      ++scans;
      const std::size_t ii = i - s;
      if (!p.reach[ii]) return;
      const __int128 cand = p.val[ii] + w - lambda;
      if (!found || cand > best) {
        found = true;
        best = cand;
        kl = p.kmin[ii];
        kh = p.kmax[ii];
        pl = ph = i;
      } else if (cand == best) {
        kl = std::min(kl, p.kmin[ii]);
        kh = std::max(kh, p.kmax[ii]);
        ph = i;
      }
    });
    if (!found) continue;
    const std::size_t jj = j - s;
    p.reach[jj] = 1;
    p.val[jj] = best;
    p.kmin[jj] = kl + 1;
    p.kmax[jj] = kh + 1;
    p.pmin[jj] = pl;
    p.pmax[jj] = ph;
  }
  if (stats) {
    ++stats->probes;
    stats->edge_scans += scans;
  }
  return p;
}

std::int64_t monge_bound(const MongeDagOracle& g) {
  return 2 * static_cast<std::int64_t>(g.node_count()) * g.bound() + 1;
}

ExtValue to_ext(__int128 v) {
  return ExtValue(detail::narrow_checked(v, "path value out of range"));
}

class AllKBuilder {
 public:
  AllKBuilder(const MongeDagOracle& g, Node s, Node t, bool restrict, MongeStats* stats)
      : g_(g), s_(s), t_(t), restrict_(restrict), stats_(stats), value_(g.node_count()) {}

  std::optional<ValueProfile> run() {
    const std::int64_t b = monge_bound(g_);
    const EdgeProbe lo = probe(-b, nullptr, nullptr);
    const EdgeProbe hi = probe(b, nullptr, nullptr);
    if (!hi.reachable(t_)) return ValueProfile(g_.node_count(), kBottom);
    record(-b, lo);
    record(b, hi);
    split(-b, lo, b, hi);
    ValueProfile out(g_.node_count(), kBottom);
    const std::int64_t kfirst = hi.kmin[t_ - s_];
    const std::int64_t klast = lo.kmax[t_ - s_];
    for (std::int64_t k = kfirst; k <= klast; ++k) {
      if (!value_[static_cast<std::size_t>(k)]) return std::nullopt;
      out[static_cast<std::size_t>(k)] = to_ext(*value_[static_cast<std::size_t>(k)]);
    }
    return out;
  }

 private:
  EdgeProbe probe(std::int64_t lambda, const EdgeProbe* left, const EdgeProbe* right) {
    return edge_probe(g_, s_, t_, lambda, restrict_ ? left : nullptr, restrict_ ? right : nullptr,
                      stats_);
  }

  void record(std::int64_t lambda, const EdgeProbe& p) {
    const ProbeResult r = p.result(t_);
    for (std::int64_t k = r.k_min; k <= r.k_max; ++k) {
      const __int128 v = r.best + static_cast<__int128>(lambda) * k;
      auto& slot = value_[static_cast<std::size_t>(k)];
      if (slot && *slot != v) {
        throw Error(Errc::concavity_violation,
                    "inconsistent value for " + std::to_string(k) + " hops");
      }
      slot = v;
    }
  }

  void split(std::int64_t l, const EdgeProbe& pl, std::int64_t r, const EdgeProbe& pr) {
    if (r - l <= 1) return;
    if (pl.kmin[t_ - s_] <= pr.kmax[t_ - s_]) return;
    const std::int64_t mid = l + (r - l) / 2;
    const EdgeProbe pm = probe(mid, &pl, &pr);
    record(mid, pm);
    split(l, pl, mid, pm);
    split(mid, pm, r, pr);
  }

  const MongeDagOracle& g_;
  Node s_, t_;
  bool restrict_;
  MongeStats* stats_;
  std::vector<std::optional<__int128>> value_;
};

}  // namespace

LagrangianResult monge_best_path(const MongeDagOracle& g, Node s, Node t, std::int64_t k) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  if (s >= t) throw Error(Errc::validation, "source must precede target");
  if (k < 1) throw Error(Errc::validation, "hop budget must be at least 1");
  auto probe = [&](std::int64_t lambda) {
    return edge_probe(g, s, t, lambda, nullptr, nullptr, nullptr).result(t);
  };
  return lagrangian_at_most(probe, k, monge_bound(g));
}

HopProfile monge_all_k(const MongeDagOracle& g, Node s, Node t, MongeStats* stats) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  if (s >= t) throw Error(Errc::validation, "source must precede target");
  if (g.is_complete()) {
    try {
      if (auto out = AllKBuilder(g, s, t, true, stats).run()) return {std::move(*out)};
    } catch (const Error& e) {
      if (e.code() != Errc::concavity_violation) throw;
    }
    if (stats) ++stats->fallbacks;
  }
  // Unrestricted probes: correct whenever the hop profile is concave.
  if (auto out = AllKBuilder(g, s, t, false, stats).run()) return {std::move(*out)};
  throw Error(Errc::concavity_violation, "penalty search left hop counts uncovered");
}

namespace {

class AllTargetsBuilder {
 public:
  AllTargetsBuilder(const MongeDagOracle& g, Node s, std::int64_t k, bool restrict,
                    MongeStats* stats)
      : g_(g), s_(s), k_(k), restrict_(restrict), stats_(stats), out_(g.node_count(), kBottom) {}

  ValueProfile run() {
    out_[s_] = 0;
    if (s_ == g_.last()) return out_;
    const EdgeProbe free = probe(g_.last(), 0, nullptr, nullptr);
    std::vector<Node> pending;
    for (Node t = s_ + 1; t <= g_.last(); ++t) {
      if (!free.reachable(t)) continue;
      if (free.kmin[t - s_] <= k_) {
        out_[t] = to_ext(free.val[t - s_]);
      } else {
        pending.push_back(t);
      }
    }
    if (pending.empty()) return out_;
    const std::int64_t b = monge_bound(g_);
    const EdgeProbe heavy = probe(pending.back(), b, &free, nullptr);
    std::vector<Node> rest;
    for (Node t : pending) {
      const ProbeResult r = heavy.result(t);
      if (!r.reachable || r.k_min > k_) continue;  // needs more than k edges
      if (r.k_max >= k_) {
        out_[t] = to_ext(r.best + static_cast<__int128>(b) * k_);
      } else {
        rest.push_back(t);
      }
    }
    split(0, free, b, heavy, rest);
    return out_;
  }

 private:
  EdgeProbe probe(Node last, std::int64_t lambda, const EdgeProbe* left, const EdgeProbe* right) {
    const bool use = restrict_ && g_.is_complete();
    return edge_probe(g_, s_, last, lambda, use ? left : nullptr, use ? right : nullptr, stats_);
  }

  void split(std::int64_t l, const EdgeProbe& pl, std::int64_t r, const EdgeProbe& pr,
             const std::vector<Node>& targets) {
    if (targets.empty()) return;
    if (r - l <= 1) {
      throw Error(Errc::concavity_violation, "no penalty brackets hop count " +
                                                 std::to_string(k_) + " for target " +
                                                 std::to_string(targets.front()));
    }
    const std::int64_t mid = l + (r - l) / 2;
    const EdgeProbe pm = probe(targets.back(), mid, &pl, &pr);
    std::vector<Node> go_left, go_right;
    for (Node t : targets) {
      const ProbeResult res = pm.result(t);
      if (res.k_max < k_) {
        go_left.push_back(t);
      } else if (res.k_min > k_) {
        go_right.push_back(t);
      } else {
        out_[t] = to_ext(res.best + static_cast<__int128>(mid) * k_);
      }
    }
    split(l, pl, mid, pm, go_left);
    split(mid, pm, r, pr, go_right);
  }

  const MongeDagOracle& g_;
  Node s_;
  std::int64_t k_;
  bool restrict_;
  MongeStats* stats_;
  ValueProfile out_;
};

}  // namespace

ValueProfile monge_all_targets(const MongeDagOracle& g, Node s, std::int64_t k,
                               MongeStats* stats) {
  require_node(g, s, "source");
  if (k < 0) throw Error(Errc::validation, "hop budget must be nonnegative");
  if (k == 0) {
    ValueProfile out(g.node_count(), kBottom);
    out[s] = 0;
    return out;
  }
  if (g.is_complete()) {
    try {
      return AllTargetsBuilder(g, s, k, true, stats).run();
    } catch (const Error& e) {
      if (e.code() != Errc::concavity_violation) throw;
    }
    if (stats) ++stats->fallbacks;
  }
  return AllTargetsBuilder(g, s, k, false, stats).run();
}

std::vector<Node> monge_canonical_path(const MongeDagOracle& g, Node s, Node t,
                                       std::int64_t lambda) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  if (t < s) return {};
  const std::size_t span = t - s + 1;
  std::vector<__int128> val(span, 0);
  std::vector<std::uint8_t> reach(span, 0);
  std::vector<Node> succ(span, t);
  reach[span - 1] = 1;
  // Push backwards from t; visiting v in descending order means the first
  // optimal successor seen for i is the largest one.
  for (Node v = t; v > s; --v) {
    if (!reach[v - s]) continue;
    g.for_each_pred(v, s, v - 1, [&](Node i, std::int64_t w) {
      const __int128 cand = val[v - s] + w - lambda;
      const std::size_t ii = i - s;
      if (!reach[ii] || cand > val[ii]) {
        reach[ii] = 1;
        val[ii] = cand;
        succ[ii] = v;
      }
    });
  }
  if (!reach[0]) return {};
  std::vector<Node> path{s};
  for (Node v = s; v != t; v = succ[v - s]) path.push_back(succ[v - s]);
  return path;
}

HopProfile monge_dp_hop_profile(const MongeDagOracle& g, Node s, Node t, std::size_t max_hops) {
  require_node(g, s, "source");
  require_node(g, t, "target");
  HopProfile out{ValueProfile(max_hops + 1, kBottom)};
  if (t < s) return out;
  const std::size_t K = std::min<std::size_t>(max_hops, t - s);
  const std::size_t span = t - s + 1;
  require_profile_entries(static_cast<std::int64_t>(span * (K + 1)), "monge dp");
  constexpr std::int64_t kNone = INT64_MIN;
  std::vector<std::int64_t> dp(span * (K + 1), kNone);
  auto at = [&](Node v, std::size_t h) -> std::int64_t& { return dp[(v - s) * (K + 1) + h]; };
  at(s, 0) = 0;
  for (Node j = s + 1; j <= t; ++j) {
    g.for_each_pred(j, s, j - 1, [&](Node i, std::int64_t w) {
      for (std::size_t h = 1; h <= K; ++h) {
        const std::int64_t prev = at(i, h - 1);
        if (prev != kNone) at(j, h) = std::max(at(j, h), prev + w);
      }
    });
  }
  for (std::size_t h = 0; h <= K; ++h) {
    if (at(t, h) != kNone) out.exact[h] = at(t, h);
  }
  return out;
}

ValueProfile monge_dp_all_targets(const MongeDagOracle& g, Node s, std::int64_t k) {
  require_node(g, s, "source");
  if (k < 0) throw Error(Errc::validation, "hop budget must be nonnegative");
  ValueProfile out(g.node_count(), kBottom);
  const std::size_t K = std::min<std::size_t>(static_cast<std::size_t>(k), g.last() - s);
  const std::size_t span = g.last() - s + 1;
  require_profile_entries(static_cast<std::int64_t>(span * (K + 1)), "monge dp");
  constexpr std::int64_t kNone = INT64_MIN;
  std::vector<std::int64_t> dp(span * (K + 1), kNone);
  auto at = [&](Node v, std::size_t h) -> std::int64_t& { return dp[(v - s) * (K + 1) + h]; };
  at(s, 0) = 0;
  for (Node j = s + 1; j <= g.last(); ++j) {
    g.for_each_pred(j, s, j - 1, [&](Node i, std::int64_t w) {
      for (std::size_t h = 1; h <= K; ++h) {
        const std::int64_t prev = at(i, h - 1);
        if (prev != kNone) at(j, h) = std::max(at(j, h), prev + w);
      }
    });
  }
  for (Node t = s; t <= g.last(); ++t) {
    std::int64_t best = kNone;
    for (std::size_t h = 0; h <= K; ++h) best = std::max(best, at(t, h));
    if (best != kNone) out[t] = best;
  }
  return out;
}

MongeDagOracle gen_squared_monge(std::size_t n, std::uint64_t perturb_seed) {
  if (n < 1) throw Error(Errc::validation, "n must be at least 1");
  const Node last = static_cast<Node>(n);
  if (perturb_seed == 0) {
    const std::int64_t bound = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
    return MongeDagOracle::complete(
        last,
        [](Node i, Node j) {
          const std::int64_t d = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
          return -d * d;
        },
        bound);
  }
  const std::size_t m = n + 1;
  require_profile_entries(static_cast<std::int64_t>(m * m), "perturbed squared monge");
  SplitMix64 rng(perturb_seed);
  auto table = std::make_shared<std::vector<std::int64_t>>(m * m, 0);
  auto& s = *table;
  // s(i,j) = sum of increments over [0,i] x [0,j]; its mixed difference is
  // the (nonnegative) increment itself.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t v = rng.uniform(0, 2);
      if (i > 0) v += s[(i - 1) * m + j];
      if (j > 0) v += s[i * m + j - 1];
      if (i > 0 && j > 0) v -= s[(i - 1) * m + j - 1];
      s[i * m + j] = v;
    }
  }
  std::vector<std::int64_t> row(m), col(m);
  for (auto& r : row) r = rng.uniform(-10, 10);
  for (auto& c : col) c = rng.uniform(-10, 10);
  auto rows = std::make_shared<std::vector<std::int64_t>>(std::move(row));
  auto cols = std::make_shared<std::vector<std::int64_t>>(std::move(col));
  return MongeDagOracle::complete(last, [table, rows, cols, m](Node i, Node j) {
    const std::int64_t d = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
    return -d * d + (*table)[i * m + j] + (*rows)[i] + (*cols)[j];
  });
}

}  // namespace capdp
