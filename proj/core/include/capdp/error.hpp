#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace capdp {

enum class Errc {
  overflow,
  not_concave,
  not_kstep_concave,
  infeasible,
  concavity_violation,
  not_transitive,
  scale_limit,
  non_integral,
  guard,
  parse,
  validation,
  io,
  usage,
};

std::string_view to_string(Errc code) noexcept;

/// Every recoverable failure in the library surfaces as an Error carrying
/// one of the codes above. The CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// True when CAPDP_GUARD_OVERRIDE=1 is set in the environment; lifts the size
// guards on the quadratic/pseudo-polynomial oracles.
bool guard_override_from_env();

}  // namespace capdp
