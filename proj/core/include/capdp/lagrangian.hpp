#pragma once

#include <cstdint>
#include <string>

#include "capdp/error.hpp"

namespace capdp {

/// One uncapacitated probe: the best penalized value and the range of hop
/// counts among the optima attaining it.
struct ProbeResult {
  bool reachable = false;
  __int128 best = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
};

/// Certificate of a Lagrangian solve: at penalty `lambda` the optimum of
/// reward - lambda*hops is `best`, attained with any hop count in
/// [k_min, k_max].
struct LagrangianOutcome {
  std::int64_t lambda = 0;
  std::int64_t best = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
};

struct LagrangianResult {
  std::int64_t value = 0;
  LagrangianOutcome certificate;
  int probes = 0;
};

namespace detail {

inline std::int64_t narrow_checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::overflow, what);
  return static_cast<std::int64_t>(v);
}

inline LagrangianResult make_result(std::int64_t lambda, const ProbeResult& r, std::int64_t k,
                                    int probes) {
  LagrangianResult out;
  out.certificate = {lambda, narrow_checked(r.best, "penalized optimum out of range"), r.k_min,
                     r.k_max};
  out.value = narrow_checked(r.best + static_cast<__int128>(lambda) * k, "value out of range");
  out.probes = probes;
  return out;
}

}  // namespace detail

/// Exact-k search: integer bisection on lambda in [lo, hi] until k lies in
/// [k_min, k_max]. Hop counts are non-increasing in lambda, and with integer
/// rewards every breakpoint of a concave hop profile is an integer slope, so
/// the bracket closes unless the profile is not concave.
template <class Probe>
LagrangianResult lagrangian_exact(Probe&& probe, std::int64_t k, std::int64_t lo,
                                  std::int64_t hi, int probes = 0) {
  const ProbeResult at_hi = probe(hi);
  ++probes;
  if (!at_hi.reachable) throw Error(Errc::infeasible, "target unreachable");
  if (at_hi.k_min > k) {
    throw Error(Errc::infeasible, "every path needs more than " + std::to_string(k) + " hops");
  }
  if (at_hi.k_max >= k) return detail::make_result(hi, at_hi, k, probes);
  const ProbeResult at_lo = probe(lo);
  ++probes;
  if (at_lo.k_max < k) {
    throw Error(Errc::infeasible, "no path uses " + std::to_string(k) + " hops");
  }
  if (at_lo.k_min <= k) return detail::make_result(lo, at_lo, k, probes);

  std::int64_t l = lo + 1;
  std::int64_t h = hi - 1;
  while (l <= h) {
    const std::int64_t mid = l + (h - l) / 2;
    const ProbeResult r = probe(mid);
    ++probes;
    if (r.k_min > k) {
      l = mid + 1;
    } else if (r.k_max < k) {
      h = mid - 1;
    } else {
      return detail::make_result(mid, r, k, probes);
    }
  }
  throw Error(Errc::concavity_violation,
              "no penalty brackets hop count " + std::to_string(k) + "; profile is not concave");
}

/// "At most k hops": the unpenalized optimum when it already fits, otherwise
/// the exact-k optimum with a positive penalty.
template <class Probe>
LagrangianResult lagrangian_at_most(Probe&& probe, std::int64_t k, std::int64_t bound) {
  const ProbeResult free = probe(0);
  if (!free.reachable) throw Error(Errc::infeasible, "target unreachable");
  if (free.k_min <= k) return detail::make_result(0, free, free.k_min, 1);
  return lagrangian_exact(probe, k, 1, bound, 1);
}

}  // namespace capdp
