#pragma once

#include <cstddef>

#include "capdp/sequences.hpp"

namespace capdp {

/// (max,+)-convolution of an arbitrary `a` with a concave `b` via SMAWK,
/// O(|a| + |b|). Throws Errc::not_concave when `b` fails check_concave.
ValueProfile conv_concave(ProfileView a, ProfileView b);

/// Same, computing only the first `out_len` entries of the result; the cost
/// drops to O(min(out_len, |a|) + min(out_len, |b|)).
ValueProfile conv_concave(ProfileView a, ProfileView b, std::size_t out_len);

/// (max,+)-convolution with a k-step concave `b`, O(|a| + |b|). Throws
/// Errc::not_kstep_concave when `b` fails check_kstep_concave.
ValueProfile conv_kstep_concave(ProfileView a, ProfileView b, std::size_t k);
ValueProfile conv_kstep_concave(ProfileView a, ProfileView b, std::size_t k,
                                std::size_t out_len);

/// out[j] = max(f[max(0, j-k+1) .. j]) using a monotone deque.
ValueProfile sliding_window_max(ProfileView f, std::size_t k);

}  // namespace capdp
