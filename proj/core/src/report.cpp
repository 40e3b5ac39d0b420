#include "capdp/report.hpp"

#include <cstdio>

namespace capdp {

void RunReport::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

void RunReport::add(std::string key, std::int64_t value) {
  add(std::move(key), std::to_string(value));
}

void RunReport::add(std::string key, ExtValue value) { add(std::move(key), to_string(value)); }

void RunReport::add_profile(std::string key, ProfileView values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ' ';
    text += to_string(values[i]);
  }
  add(std::move(key), std::move(text));
}

const std::string* RunReport::find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string RunReport::to_text(bool with_timing) const {
  std::string out;
  for (const auto& [k, v] : fields_) {
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
  if (with_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall_ms: %.3f\n", wall_ms);
    out += buf;
  }
  return out;
}

}  // namespace capdp
