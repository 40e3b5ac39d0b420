#include "capdp/unbounded.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace capdp {
namespace {

// First `len` entries of a (max,+) b.
ValueProfile truncated_conv(ProfileView a, ProfileView b, std::size_t len) {
  ValueProfile c(len, kBottom);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_bottom()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (b[j].is_bottom()) continue;
      c[i + j] = std::max(c[i + j], a[i] + b[j]);
    }
  }
  return c;
}

std::size_t ceil_log2(std::int64_t x) {
  std::size_t r = 0;
  while ((std::int64_t{1} << r) < x) ++r;
  return r;
}

// Exact-size profile over 0..len-1 allowing up to 2^rounds pieces, starting
// from single pieces `seed` (seed[0] must be 0).
ValueProfile repeated_squaring(ValueProfile seed, std::size_t rounds) {
  const std::size_t len = seed.size();
  for (std::size_t z = 0; z < rounds; ++z) seed = truncated_conv(seed, seed, len);
  return seed;
}

}  // namespace

UnboundedInstance::UnboundedInstance(std::vector<Item> items, std::int64_t capacity)
    : capacity_(capacity), input_count_(items.size()) {
  if (capacity < 0) throw Error(Errc::validation, "capacity must be nonnegative");
  std::map<std::int64_t, std::int64_t> best;
  std::int64_t max_abs = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    if (it.weight < 1 || it.value < 1) {
      throw Error(Errc::validation,
                  "item " + std::to_string(i) + " must have positive weight and value");
    }
    max_abs = std::max({max_abs, it.weight, it.value});
    if (it.weight > capacity) continue;
    auto [pos, inserted] = best.emplace(it.weight, it.value);
    if (!inserted) pos->second = std::max(pos->second, it.value);
  }
  const __int128 magnitude = static_cast<__int128>(items.size()) * 2 * max_abs;
  if (magnitude > kMagnitudeBudget) throw Error(Errc::overflow, "n*(max|v|+max|w|) exceeds 2^55");
  for (const auto& [w, v] : best) {
    items_.push_back({w, v});
    max_weight_ = std::max(max_weight_, w);
    max_value_ = std::max(max_value_, v);
  }
  // Every solution value is at most T * V since weights are at least 1.
  if (static_cast<__int128>(capacity) * max_value_ > kMagnitudeBudget) {
    throw Error(Errc::overflow, "T*V exceeds 2^55");
  }
}

DensityChampion density_champion(const UnboundedInstance& inst) {
  const auto& items = inst.items();
  if (items.empty()) throw Error(Errc::validation, "instance has no packable items");
  DensityChampion c{0, items[0].weight, items[0].value};
  for (std::size_t i = 1; i < items.size(); ++i) {
    const __int128 lhs = static_cast<__int128>(items[i].value) * c.weight;
    const __int128 rhs = static_cast<__int128>(c.value) * items[i].weight;
    if (lhs > rhs || (lhs == rhs && items[i].weight < c.weight)) {
      c = {i, items[i].weight, items[i].value};
    }
  }
  return c;
}

ValueProfile base_window(const UnboundedInstance& inst) {
  const std::int64_t m = inst.max_weight();
  if (m < 1) throw Error(Errc::validation, "base window needs at least one item");
  ValueProfile seed(static_cast<std::size_t>(m) + 1, kBottom);
  seed[0] = 0;
  for (const Item& it : inst.items()) seed[static_cast<std::size_t>(it.weight)] = it.value;
  return prefix_max(repeated_squaring(std::move(seed), ceil_log2(m)));
}

ValueProfile windowed_profile(ProfileView base, std::int64_t step, std::int64_t lo,
                              std::int64_t hi) {
  if (step < 1 || base.size() < static_cast<std::size_t>(step) + 1) {
    throw Error(Errc::validation, "base must cover indices 0..step");
  }
  lo = std::max<std::int64_t>(lo, 0);
  if (hi < lo) return {};
  const auto base_hi = static_cast<std::int64_t>(base.size()) - 1;

  std::vector<std::pair<std::int64_t, std::int64_t>> ranges{{lo, hi}};
  while (ranges.back().second > base_hi) {
    const auto [l, h] = ranges.back();
    const std::int64_t nl = l - step <= 0 ? 0 : (l - step + 1) / 2;
    const std::int64_t nh = (h + step) / 2;
    ranges.emplace_back(nl, nh);
  }

  auto [cur_lo, cur_hi] = ranges.back();
  ValueProfile window(base.begin() + cur_lo, base.begin() + cur_hi + 1);
  for (std::size_t level = ranges.size() - 1; level-- > 0;) {
    const auto [l, h] = ranges[level];
    ValueProfile next(static_cast<std::size_t>(h - l + 1), kBottom);
    for (std::int64_t s = l; s <= h; ++s) {
      ExtValue best = kBottom;
      const std::int64_t p_lo = std::max(cur_lo, s - cur_hi);
      const std::int64_t p_hi = std::min(cur_hi, s / 2);
      for (std::int64_t p = p_lo; p <= p_hi; ++p) {
        const ExtValue x = window[static_cast<std::size_t>(p - cur_lo)];
        const ExtValue y = window[static_cast<std::size_t>(s - p - cur_lo)];
        if (x.is_bottom() || y.is_bottom()) continue;
        best = std::max(best, x + y);
      }
      next[static_cast<std::size_t>(s - l)] = best;
    }
    window = std::move(next);
    cur_lo = l;
    cur_hi = h;
  }
  return window;
}

UnboundedWindow solve_unbounded_window(const UnboundedInstance& inst) {
  const std::int64_t cap = inst.capacity();
  const std::int64_t m = inst.max_weight();
  UnboundedWindow out;
  out.first = std::max<std::int64_t>(0, cap - m);
  if (inst.items().empty()) {
    out.values.assign(static_cast<std::size_t>(cap - out.first) + 1, ExtValue(0));
    return out;
  }
  const ValueProfile base = base_window(inst);
  out.values = windowed_profile(base, m, out.first, cap);
  return out;
}

std::int64_t solve_unbounded_doubling(const UnboundedInstance& inst) {
  const UnboundedWindow w = solve_unbounded_window(inst);
  return std::max_element(w.values.begin(), w.values.end())->value();
}

std::int64_t solve_unbounded_steinitz(const UnboundedInstance& inst) {
  if (inst.items().empty()) return 0;
  const std::int64_t m = inst.max_weight();
  const std::int64_t cap = inst.capacity();
  const __int128 m2 = static_cast<__int128>(m) * m;
  if (cap <= m2) return solve_unbounded_doubling(inst);
  const DensityChampion c = density_champion(inst);
  const auto excess = static_cast<std::int64_t>(cap - m2);
  const std::int64_t copies = (excess + c.weight - 1) / c.weight;
  const UnboundedInstance residual(inst.items(), cap - copies * c.weight);
  return copies * c.value + solve_unbounded_doubling(residual);
}

std::int64_t solve_unbounded_value_domain(const UnboundedInstance& inst) {
  if (inst.items().empty()) return 0;
  const DensityChampion c = density_champion(inst);
  const std::int64_t v_max = inst.max_value();
  const std::int64_t k = inst.capacity() / c.weight + 1;
  const std::int64_t committed = std::max<std::int64_t>(0, k - v_max);
  const std::int64_t residual_cap = inst.capacity() - committed * c.weight;

  // Negated minimum weight per exact value 0..2V, then "value at least x"
  // for x in 0..V via suffix maxima.
  ValueProfile seed(static_cast<std::size_t>(2 * v_max) + 1, kBottom);
  seed[0] = 0;
  for (const Item& it : inst.items()) {
    auto& slot = seed[static_cast<std::size_t>(it.value)];
    slot = std::max(slot, ExtValue(-it.weight));
  }
  ValueProfile exact = repeated_squaring(std::move(seed), ceil_log2(2 * v_max));
  for (std::size_t x = exact.size() - 1; x-- > 0;) exact[x] = std::max(exact[x], exact[x + 1]);
  exact.resize(static_cast<std::size_t>(v_max) + 1);

  const std::int64_t lo = (k - 1 - committed) * c.value;
  const std::int64_t hi = (k - committed) * c.value;
  const ValueProfile neg_weight = windowed_profile(exact, v_max, lo, hi);
  std::int64_t best = lo;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const ExtValue w = neg_weight[static_cast<std::size_t>(x - lo)];
    if (w.is_finite() && -w.value() <= residual_cap) best = x;
  }
  return committed * c.value + best;
}

ValueProfile solve_unbounded_dp(const UnboundedInstance& inst) {
  const std::int64_t cap = inst.capacity();
  const __int128 work = static_cast<__int128>(std::max<std::size_t>(inst.items().size(), 1)) * cap;
  if (work > kUnboundedDpBudget && !guard_override_from_env()) {
    throw Error(Errc::guard, "unbounded dp needs n*T <= 1e8 (set CAPDP_GUARD_OVERRIDE=1)");
  }
  require_profile_entries(cap + 1, "unbounded dp");
  std::vector<std::int64_t> a(static_cast<std::size_t>(cap) + 1, 0);
  for (std::int64_t t = 1; t <= cap; ++t) {
    std::int64_t best = 0;
    for (const Item& it : inst.items()) {
      if (it.weight > t) break;
      best = std::max(best, a[static_cast<std::size_t>(t - it.weight)] + it.value);
    }
    a[static_cast<std::size_t>(t)] = best;
  }
  return ValueProfile(a.begin(), a.end());
}

}  // namespace capdp
