#include "capdp/error.hpp"

#include <cstdlib>
#include <cstring>

namespace capdp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::overflow: return "OVERFLOW";
    case Errc::not_concave: return "NOT_CONCAVE";
    case Errc::not_kstep_concave: return "NOT_KSTEP_CONCAVE";
    case Errc::infeasible: return "INFEASIBLE";
    case Errc::concavity_violation: return "CONCAVITY_VIOLATION";
    case Errc::not_transitive: return "NOT_TRANSITIVE";
    case Errc::scale_limit: return "SCALE_LIMIT";
    case Errc::non_integral: return "NON_INTEGRAL";
    case Errc::guard: return "GUARD";
    case Errc::parse: return "PARSE";
    case Errc::validation: return "VALIDATION";
    case Errc::io: return "IO";
    case Errc::usage: return "USAGE";
  }
  return "UNKNOWN";
}

bool guard_override_from_env() {
  const char* v = std::getenv("CAPDP_GUARD_OVERRIDE");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

}  // namespace capdp
