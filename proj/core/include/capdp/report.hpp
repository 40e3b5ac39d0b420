#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "capdp/sequences.hpp"

namespace capdp {

/// "key: value" lines in insertion order, with wall time appended last.
class RunReport {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, std::int64_t value);
  void add(std::string key, ExtValue value);
  void add_profile(std::string key, ProfileView values);

  const std::string* find(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  double wall_ms = 0.0;

  /// Timing is left out when `with_timing` is false, so two runs with the
  /// same inputs compare byte for byte.
  std::string to_text(bool with_timing = true) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace capdp
