#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "capdp/error.hpp"

namespace capdp {

/// A 64-bit integer extended with the two absorbing sentinels used by
/// (max,+) and (min,+) arithmetic. BOTTOM ("no feasible solution") is smaller
/// than every finite value, TOP is larger. Finite magnitudes are kept within
/// kLimit so that sentinel payloads can never be produced by arithmetic.
class ExtValue {
 public:
  using rep = std::int64_t;
  static constexpr rep kLimit = rep{1} << 62;

  /// Default-constructed values are BOTTOM.
  constexpr ExtValue() noexcept = default;

  constexpr ExtValue(rep v) : raw_(v) {  // NOLINT(google-explicit-constructor)
    if (v > kLimit || v < -kLimit) {
      throw Error(Errc::overflow, "finite value out of range: " + std::to_string(v));
    }
  }

  static constexpr ExtValue bottom() noexcept { return ExtValue(kBottomRaw, Raw{}); }
  static constexpr ExtValue top() noexcept { return ExtValue(kTopRaw, Raw{}); }

  constexpr bool is_bottom() const noexcept { return raw_ == kBottomRaw; }
  constexpr bool is_top() const noexcept { return raw_ == kTopRaw; }
  constexpr bool is_finite() const noexcept { return raw_ != kBottomRaw && raw_ != kTopRaw; }

  /// Finite payload. Calling this on a sentinel is a logic error.
  rep value() const {
    if (!is_finite()) throw std::logic_error("ExtValue::value() on a sentinel");
    return raw_;
  }

  constexpr rep raw() const noexcept { return raw_; }

  friend constexpr auto operator<=>(ExtValue, ExtValue) noexcept = default;

  friend ExtValue operator+(ExtValue a, ExtValue b) {
    if (a.is_bottom() || b.is_bottom()) {
      if (a.is_top() || b.is_top()) throw std::logic_error("BOTTOM + TOP is undefined");
      return bottom();
    }
    if (a.is_top() || b.is_top()) return top();
    rep sum;
    if (__builtin_add_overflow(a.raw_, b.raw_, &sum) || sum > kLimit || sum < -kLimit) {
      throw Error(Errc::overflow, "finite sum out of range");
    }
    return ExtValue(sum, Raw{});
  }

  friend ExtValue operator-(ExtValue a) noexcept {
    if (a.is_bottom()) return top();
    if (a.is_top()) return bottom();
    return ExtValue(-a.raw_, Raw{});
  }

 private:
  struct Raw {};
  static constexpr rep kBottomRaw = std::numeric_limits<rep>::min();
  static constexpr rep kTopRaw = std::numeric_limits<rep>::max();

  constexpr ExtValue(rep raw, Raw) noexcept : raw_(raw) {}

  rep raw_ = kBottomRaw;
};

inline constexpr ExtValue kBottom = ExtValue::bottom();
inline constexpr ExtValue kTop = ExtValue::top();

std::string to_string(ExtValue v);
std::ostream& operator<<(std::ostream& os, ExtValue v);

}  // namespace capdp
