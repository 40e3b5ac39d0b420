#pragma once

// Brute-force references used only by tests. Each works from the problem
// definition, not from any library solver.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "capdp/dag.hpp"
#include "capdp/knapsack.hpp"
#include "capdp/monge.hpp"
#include "capdp/rng.hpp"
#include "capdp/sequences.hpp"
#include "capdp/smawk.hpp"

namespace oracle {

using capdp::ExtValue;
using capdp::Item;
using capdp::Node;
using capdp::ValueProfile;

constexpr std::int64_t kNone = INT64_MIN;

inline ValueProfile to_profile(const std::vector<std::int64_t>& v) {
  ValueProfile p;
  for (std::int64_t x : v) p.push_back(x == kNone ? capdp::kBottom : ExtValue(x));
  return p;
}

/// Best value per capacity 0..T over all 2^n subsets.
inline ValueProfile subset_knapsack(const std::vector<Item>& items, std::int64_t cap) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, 0);
  const std::size_t n = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t w = 0, v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        w += items[i].weight;
        v += items[i].value;
      }
    }
    for (std::int64_t t = w; t <= cap; ++t) best[t] = std::max(best[t], v);
  }
  return to_profile(best);
}

/// Unbounded optimum at every capacity by enumerating multisets
/// (count vectors) recursively. Tiny T only.
inline ValueProfile multiset_unbounded(const std::vector<Item>& items, std::int64_t cap) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i,
                                                                        std::int64_t w,
                                                                        std::int64_t v) {
    if (i == items.size()) {
      for (std::int64_t t = w; t <= cap; ++t) best[t] = std::max(best[t], v);
      return;
    }
    for (std::int64_t c = 0; w + c * items[i].weight <= cap; ++c) {
      go(i + 1, w + c * items[i].weight, v + c * items[i].value);
    }
  };
  go(0, 0, 0);
  return to_profile(best);
}

/// Forward-push unbounded DP written independently of the library one.
inline std::vector<std::int64_t> push_unbounded(const std::vector<Item>& items, std::int64_t cap) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(cap) + 1, 0);
  for (std::int64_t t = 0; t <= cap; ++t) {
    if (t > 0) a[t] = std::max(a[t], a[t - 1]);
    for (const Item& it : items) {
      if (t + it.weight <= cap) a[t + it.weight] = std::max(a[t + it.weight], a[t] + it.value);
    }
  }
  return a;
}

/// Exact-k hop profile by enumerating every s->t path.
inline ValueProfile enumerate_hop_profile(const capdp::NodeWeightedDag& g, Node s, Node t,
                                          std::size_t max_hops) {
  std::vector<std::int64_t> best(max_hops + 1, kNone);
  std::function<void(Node, std::int64_t, std::size_t)> walk = [&](Node u, std::int64_t val,
                                                                  std::size_t hops) {
    if (hops > max_hops) return;
    if (u == t) best[hops] = std::max(best[hops], val);
    for (Node v : g.out(u)) {
      if (v > t || g.reward(v).is_bottom()) continue;
      walk(v, val + g.reward(v).value(), hops + g.hop_cost(v));
    }
  };
  walk(s, 0, 0);
  return to_profile(best);
}

/// Exact-k profile of an edge-weighted oracle by enumerating paths.
inline ValueProfile enumerate_monge_profile(const capdp::MongeDagOracle& g, Node s, Node t) {
  std::vector<std::int64_t> best(g.node_count(), kNone);
  std::function<void(Node, std::int64_t, std::size_t)> walk = [&](Node u, std::int64_t val,
                                                                  std::size_t hops) {
    if (u == t) {
      best[hops] = std::max(best[hops], val);
      return;
    }
    for (Node v = u + 1; v <= t; ++v) {
      const ExtValue w = g.weight(u, v);
      if (w.is_finite()) walk(v, val + w.value(), hops + 1);
    }
  };
  walk(s, 0, 0);
  return to_profile(best);
}

/// Max sum of exactly k entries at pairwise distance >= delta, by
/// enumerating index sets. BOTTOM when none exists.
inline ExtValue enumerate_separated(const std::vector<std::int64_t>& a, std::size_t k,
                                    std::size_t delta) {
  std::int64_t best = kNone;
  std::function<void(std::size_t, std::size_t, std::int64_t)> go = [&](std::size_t from,
                                                                       std::size_t left,
                                                                       std::int64_t sum) {
    if (left == 0) {
      best = std::max(best, sum);
      return;
    }
    for (std::size_t i = from; i < a.size(); ++i) go(i + delta, left - 1, sum + a[i]);
  };
  go(0, k, 0);
  return best == kNone ? capdp::kBottom : ExtValue(best);
}

inline ValueProfile window_scan(const ValueProfile& f, std::size_t k) {
  ValueProfile out(f.size(), capdp::kBottom);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const std::size_t lo = j + 1 >= k ? j + 1 - k : 0;
    for (std::size_t i = lo; i <= j; ++i) out[j] = std::max(out[j], f[i]);
  }
  return out;
}

/// Random concave profile: random differences sorted descending, optional
/// BOTTOM padding on either side.
inline ValueProfile random_concave(std::size_t len, capdp::SplitMix64& rng,
                                   bool pad = false) {
  std::vector<std::int64_t> diffs(len > 0 ? len - 1 : 0);
  for (auto& d : diffs) d = rng.uniform(-50, 50);
  std::sort(diffs.rbegin(), diffs.rend());
  ValueProfile b;
  std::int64_t v = rng.uniform(-100, 100);
  for (std::size_t i = 0; i < len; ++i) {
    b.emplace_back(v);
    if (i < diffs.size()) v += diffs[i];
  }
  if (pad && len > 2) {
    const std::size_t pre = static_cast<std::size_t>(rng.uniform(0, 2));
    const std::size_t suf = static_cast<std::size_t>(rng.uniform(0, 2));
    for (std::size_t i = 0; i < pre && i < b.size(); ++i) b[i] = capdp::kBottom;
    for (std::size_t i = 0; i < suf && b.size() > pre + i + 1; ++i) b[b.size() - 1 - i] = capdp::kBottom;
  }
  return b;
}

/// k-step concave: a concave core with each entry repeated k times, cut to
/// `len` entries.
inline ValueProfile random_kstep(std::size_t len, std::size_t k, capdp::SplitMix64& rng) {
  const ValueProfile core = random_concave(len / k + 1, rng);
  ValueProfile b;
  for (std::size_t i = 0; i < len; ++i) b.push_back(core[i / k]);
  return b;
}

inline ValueProfile random_arbitrary(std::size_t len, capdp::SplitMix64& rng,
                                     bool holes = false) {
  ValueProfile a;
  for (std::size_t i = 0; i < len; ++i) {
    if (holes && rng.chance(1, 8)) {
      a.push_back(capdp::kBottom);
    } else {
      a.emplace_back(rng.uniform(-1000, 1000));
    }
  }
  return a;
}

/// Dense matrix with A[i][j] + A[i+1][j+1] >= A[i+1][j] + A[i][j+1]: 2-D
/// prefix sums of nonnegative increments plus row and column offsets.
inline std::vector<std::vector<std::int64_t>> random_inverse_monge(std::size_t rows,
                                                                   std::size_t cols,
                                                                   capdp::SplitMix64& rng) {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  const std::int64_t inc = rng.uniform(0, 5);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = rng.uniform(0, inc);
      if (i > 0) v += m[i - 1][j];
      if (j > 0) v += m[i][j - 1];
      if (i > 0 && j > 0) v -= m[i - 1][j - 1];
      m[i][j] = v;
    }
  }
  std::vector<std::int64_t> r(rows), c(cols);
  for (auto& x : r) x = rng.uniform(-1000, 1000);
  for (auto& x : c) x = rng.uniform(-1000, 1000);
  // The prefix sums favour the last column; a concave column term moves the
  // maxima around.
  const std::int64_t bend = rng.uniform(0, 3);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t d = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
      m[i][j] += r[i] + c[j] - bend * d * d;
    }
  }
  return m;
}

inline capdp::MatrixOracle dense_oracle(const std::vector<std::vector<std::int64_t>>& m) {
  return {m.size(), m.empty() ? 0 : m[0].size(),
          [&m](std::size_t i, std::size_t j) { return ExtValue(m[i][j]); }};
}

}  // namespace oracle
