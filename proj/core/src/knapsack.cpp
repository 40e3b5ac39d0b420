#include "capdp/knapsack.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "capdp/concave_conv.hpp"

namespace capdp {

void require_profile_entries(std::int64_t entries, const char* what) {
  if (entries > kMaxProfileEntries && !guard_override_from_env()) {
    throw Error(Errc::guard, std::string(what) + " needs " + std::to_string(entries) +
                                 " profile entries (limit " +
                                 std::to_string(kMaxProfileEntries) + ")");
  }
}

KnapsackInstance::KnapsackInstance(std::vector<Item> items, std::int64_t capacity, bool lax)
    : capacity_(capacity), input_count_(items.size()) {
  if (capacity < 0) throw Error(Errc::validation, "capacity must be nonnegative");
  std::int64_t max_abs_w = 0;
  std::int64_t max_abs_v = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    if (it.weight < 0 || it.value < 0) {
      throw Error(Errc::validation, "item " + std::to_string(i) + " has a negative field");
    }
    if (!lax && (it.weight == 0 || it.value == 0)) {
      throw Error(Errc::validation, "item " + std::to_string(i) + " has a zero field");
    }
    max_abs_w = std::max(max_abs_w, it.weight);
    max_abs_v = std::max(max_abs_v, it.value);
  }
  const __int128 magnitude = static_cast<__int128>(items.size()) * (max_abs_v + max_abs_w);
  if (magnitude > kMagnitudeBudget) {
    throw Error(Errc::overflow, "n*(max|v|+max|w|) exceeds 2^55");
  }

  for (const Item& it : items) {
    if (it.value == 0) continue;
    if (it.weight == 0) {
      offset_ += it.value;
    } else if (it.weight <= capacity) {
      items_.push_back(it);
      max_weight_ = std::max(max_weight_, it.weight);
      max_value_ = std::max(max_value_, it.value);
    }
  }
  std::vector<std::int64_t> weights;
  weights.reserve(items_.size());
  for (const Item& it : items_) weights.push_back(it.weight);
  std::sort(weights.begin(), weights.end());
  distinct_weights_ =
      static_cast<std::size_t>(std::unique(weights.begin(), weights.end()) - weights.begin());
}

WeightClassProfile greedy_class_profile(std::vector<std::int64_t> values, std::int64_t weight,
                                        std::int64_t capacity) {
  if (weight < 1) throw Error(Errc::validation, "class weight must be positive");
  if (capacity < 0) throw Error(Errc::validation, "capacity must be nonnegative");
  std::sort(values.begin(), values.end(), std::greater<>());
  WeightClassProfile out{weight, ValueProfile(static_cast<std::size_t>(capacity) + 1)};
  std::int64_t sum = 0;
  std::size_t taken = 0;
  for (std::int64_t t = 0; t <= capacity; ++t) {
    if (t > 0 && t % weight == 0 && taken < values.size()) sum += values[taken++];
    out.profile[static_cast<std::size_t>(t)] = sum;
  }
  return out;
}

namespace {

void add_offset(ValueProfile& s, std::int64_t offset) {
  if (offset == 0) return;
  for (ExtValue& v : s) v = v + offset;
}

// Items grouped by an integer key, groups in increasing key order.
template <class Key, class Payload>
std::map<std::int64_t, std::vector<std::int64_t>> group_items(const std::vector<Item>& items,
                                                              Key key, Payload payload) {
  std::map<std::int64_t, std::vector<std::int64_t>> groups;
  for (const Item& it : items) groups[key(it)].push_back(payload(it));
  return groups;
}

}  // namespace

ValueProfile solve_knapsack_td(const KnapsackInstance& inst) {
  const std::int64_t cap = inst.capacity();
  require_profile_entries(cap + 1, "knapsack td");
  const auto len = static_cast<std::size_t>(cap) + 1;
  ValueProfile s(len, ExtValue(0));
  const auto classes = group_items(
      inst.items(), [](const Item& it) { return it.weight; },
      [](const Item& it) { return it.value; });
  for (const auto& [weight, values] : classes) {
    const WeightClassProfile b = greedy_class_profile(values, weight, cap);
    s = conv_kstep_concave(s, b.profile, static_cast<std::size_t>(weight), len);
  }
  add_offset(s, inst.offset());
  return s;
}

namespace {

template <class Int>
ValueProfile bellman_rows(const KnapsackInstance& inst) {
  const std::int64_t cap = inst.capacity();
  std::vector<Int> dp(static_cast<std::size_t>(cap) + 1, 0);
  Int* d = dp.data();
  for (const Item& it : inst.items()) {
    const std::int64_t w = it.weight;
    const Int v = static_cast<Int>(it.value);
    for (std::int64_t t = cap; t >= w; --t) {
      const Int cand = d[t - w] + v;
      d[t] = cand > d[t] ? cand : d[t];
    }
  }
  ValueProfile s(dp.begin(), dp.end());
  add_offset(s, inst.offset());
  return s;
}

}  // namespace

ValueProfile solve_knapsack_bellman(const KnapsackInstance& inst) {
  require_profile_entries(inst.capacity() + 1, "knapsack bellman");
  __int128 total = 0;
  for (const Item& it : inst.items()) total += it.value;
  // 32-bit lanes vectorize twice as wide; used whenever no sum can overflow.
  if (total <= INT32_MAX) return bellman_rows<std::int32_t>(inst);
  return bellman_rows<std::int64_t>(inst);
}

std::int64_t solve_knapsack_value_domain(const KnapsackInstance& inst) {
  const auto n = static_cast<std::int64_t>(inst.items().size());
  const std::int64_t max_total = n * inst.max_value();
  require_profile_entries(max_total + 1, "knapsack value-domain");
  const auto len = static_cast<std::size_t>(max_total) + 1;

  // s[x] = minimum weight reaching total value >= x; TOP when unreachable.
  ValueProfile s(len, kTop);
  s[0] = 0;
  const auto classes = group_items(
      inst.items(), [](const Item& it) { return it.value; },
      [](const Item& it) { return it.weight; });
  for (auto [value, weights] : classes) {
    std::sort(weights.begin(), weights.end());
    // e[z] = min class weight reaching value >= z+1; constant on blocks of
    // length `value`, so -e is value-step concave.
    ValueProfile neg_e(len - 1, kBottom);
    std::int64_t sum = 0;
    std::size_t used = 0;
    for (std::size_t z = 0; z + 1 < len; ++z) {
      if (z % static_cast<std::size_t>(value) == 0) {
        if (used == weights.size()) break;
        sum += weights[used++];
      }
      neg_e[z] = -sum;
    }
    if (neg_e.empty()) continue;
    const ValueProfile shifted =
        conv_kstep_concave(negated(s), neg_e, static_cast<std::size_t>(value), len - 1);
    for (std::size_t x = 1; x < len; ++x) {
      if (x - 1 < shifted.size()) s[x] = std::min(s[x], -shifted[x - 1]);
    }
  }
  std::int64_t best = 0;
  for (std::size_t x = 0; x < len; ++x) {
    if (s[x].is_finite() && s[x].value() <= inst.capacity()) best = static_cast<std::int64_t>(x);
  }
  return best + inst.offset();
}

}  // namespace capdp
