#include "capdp/ext_value.hpp"

#include <ostream>

namespace capdp {

std::string to_string(ExtValue v) {
  if (v.is_bottom()) return "-inf";
  if (v.is_top()) return "+inf";
  return std::to_string(v.raw());
}

std::ostream& operator<<(std::ostream& os, ExtValue v) { return os << to_string(v); }

}  // namespace capdp
