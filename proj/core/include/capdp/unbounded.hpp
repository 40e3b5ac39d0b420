#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capdp/knapsack.hpp"
#include "capdp/sequences.hpp"

namespace capdp {

/// Unbounded knapsack input: one item per weight (the most valuable one),
/// oversize items removed, so M <= T whenever any item remains.
class UnboundedInstance {
 public:
  UnboundedInstance(std::vector<Item> items, std::int64_t capacity);

  const std::vector<Item>& items() const noexcept { return items_; }
  std::int64_t capacity() const noexcept { return capacity_; }
  std::size_t input_count() const noexcept { return input_count_; }
  std::int64_t max_weight() const noexcept { return max_weight_; }
  std::int64_t max_value() const noexcept { return max_value_; }

 private:
  std::vector<Item> items_;  // sorted by weight
  std::int64_t capacity_ = 0;
  std::size_t input_count_ = 0;
  std::int64_t max_weight_ = 0;
  std::int64_t max_value_ = 0;
};

/// Item with the highest value/weight ratio; ties prefer the smaller weight,
/// then the smaller index.
struct DensityChampion {
  std::size_t index = 0;
  std::int64_t weight = 0;
  std::int64_t value = 0;
};

DensityChampion density_champion(const UnboundedInstance& inst);

/// Optimal values for capacities 0..M from ceil(log2 M) truncated
/// self-convolutions of the per-weight item values. O(M^2 log M).
ValueProfile base_window(const UnboundedInstance& inst);

/// Entries lo..hi of a superadditive "at most" profile whose pieces are at
/// most `step` wide, given its exact prefix `base` (indices 0..step or more).
/// Each level squares a window of width <= 2*step+2 around half the target
/// range: any solution splits into two halves whose sizes differ by at most
/// `step`. O(step^2 log(hi/step)).
ValueProfile windowed_profile(ProfileView base, std::int64_t step, std::int64_t lo,
                              std::int64_t hi);

struct UnboundedWindow {
  std::int64_t first = 0;  // capacity of values[0]
  ValueProfile values;     // optimal values for capacities first..T
};

/// Profile entries for capacities max(0, T-M)..T by windowed squaring.
UnboundedWindow solve_unbounded_window(const UnboundedInstance& inst);

/// O(M^2 log T) optimum: max over the final window [T-M, T].
std::int64_t solve_unbounded_doubling(const UnboundedInstance& inst);

/// When T > M^2, commits ceil((T-M^2)/w) copies of the density champion
/// first and solves the residual capacity (at most M^2) by doubling.
std::int64_t solve_unbounded_steinitz(const UnboundedInstance& inst);

/// Value-domain variant: min weight per value over a window of width V
/// anchored at (k-V) champion copies, k = floor(T/w)+1. O(V^2 log V).
std::int64_t solve_unbounded_value_domain(const UnboundedInstance& inst);

/// a[t] = max(0, max_i a[t-w_i] + v_i). Guarded by n*T <= 1e8.
ValueProfile solve_unbounded_dp(const UnboundedInstance& inst);

inline constexpr std::int64_t kUnboundedDpBudget = 100'000'000;

}  // namespace capdp
