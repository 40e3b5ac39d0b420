#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "capdp/ext_value.hpp"

namespace capdp {

/// Capacity- or hop-indexed sequence of extended values; index 0 is the
/// empty selection.
using ValueProfile = std::vector<ExtValue>;
using ProfileView = std::span<const ExtValue>;

/// Quadratic reference (max,+)-convolution: c_i = max_j a_j + b_{i-j}.
/// Result has |a|+|b|-1 entries (empty if either input is empty).
ValueProfile naive_maxplus_conv(ProfileView a, ProfileView b);

/// (min,+) counterpart; TOP plays the absorbing role.
ValueProfile naive_minplus_conv(ProfileView a, ProfileView b);

/// Entrywise negation; maps BOTTOM to TOP and back.
ValueProfile negated(ProfileView a);

/// Running maximum, turning an exact-index profile into an "at most" view.
ValueProfile prefix_max(ProfileView a);

struct ConcavityWitness {
  enum class Kind {
    concave,
    violation,       // a[i]-a[i-1] < a[i+1]-a[i]
    step_mismatch,   // k-step: a[i] != a[i-1] with i % k != 0
    not_applicable,  // interior BOTTOM hole or a TOP entry
  };

  Kind kind = Kind::concave;
  std::size_t index = 0;
  ExtValue prev, mid, next;

  bool is_concave() const noexcept { return kind == Kind::concave; }
};

/// Concavity of the contiguous finite block. BOTTOM is tolerated only as a
/// prefix and/or suffix.
ConcavityWitness check_concave(ProfileView a);

/// Constant on every block [qk, qk+k-1] and concave on the stride-k
/// subsequence a_0, a_k, a_2k, ...
ConcavityWitness check_kstep_concave(ProfileView a, std::size_t k);

std::string describe(const ConcavityWitness& w);

}  // namespace capdp
