#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capdp/sequences.hpp"

namespace capdp {

struct Item {
  std::int64_t weight = 0;
  std::int64_t value = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Largest profile any solver allocates (entries); beyond this the input is
/// rejected with Errc::guard unless CAPDP_GUARD_OVERRIDE=1.
inline constexpr std::int64_t kMaxProfileEntries = std::int64_t{1} << 27;

/// Magnitude budget for n * (max|v| + max|w|); leaves headroom for
/// Lagrangian penalties downstream.
inline constexpr std::int64_t kMagnitudeBudget = std::int64_t{1} << 55;

void require_profile_entries(std::int64_t entries, const char* what);

/// 0/1 knapsack input. Items that can never be packed (weight > T) are
/// dropped at construction, so D, M and V describe the packable items only.
/// In lax mode zero-weight items are folded into a constant offset and
/// zero-value items are dropped; strict mode rejects both.
class KnapsackInstance {
 public:
  KnapsackInstance(std::vector<Item> items, std::int64_t capacity, bool lax = false);

  const std::vector<Item>& items() const noexcept { return items_; }
  std::int64_t capacity() const noexcept { return capacity_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::size_t input_count() const noexcept { return input_count_; }
  std::size_t distinct_weights() const noexcept { return distinct_weights_; }
  std::int64_t max_weight() const noexcept { return max_weight_; }
  std::int64_t max_value() const noexcept { return max_value_; }

 private:
  std::vector<Item> items_;
  std::int64_t capacity_ = 0;
  std::int64_t offset_ = 0;
  std::size_t input_count_ = 0;
  std::size_t distinct_weights_ = 0;
  std::int64_t max_weight_ = 0;
  std::int64_t max_value_ = 0;
};

struct WeightClassProfile {
  std::int64_t weight = 0;
  ValueProfile profile;
};

/// Best value per capacity 0..T using only items of one weight: the j most
/// valuable items occupy capacity j*w. The result is w-step concave.
WeightClassProfile greedy_class_profile(std::vector<std::int64_t> values, std::int64_t weight,
                                        std::int64_t capacity);

/// O(T*D): folds the D weight-class profiles with k-step concave
/// convolutions, truncating to T+1 entries after every fold. Entry t is the
/// optimum over selections of total weight at most t.
ValueProfile solve_knapsack_td(const KnapsackInstance& inst);

/// Textbook O(T*n) dynamic program; the reference profile.
ValueProfile solve_knapsack_bellman(const KnapsackInstance& inst);

/// Roles of weights and values swapped: computes the minimum weight needed to
/// reach each value up to n*V with (min,+) k-step convolutions, then returns
/// the largest value whose minimum weight fits in T. O(n*V^2).
std::int64_t solve_knapsack_value_domain(const KnapsackInstance& inst);

}  // namespace capdp
