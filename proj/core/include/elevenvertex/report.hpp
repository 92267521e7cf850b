#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elv::report {

struct Check {
  std::string name;    // unique, reports are sorted by it
  std::string target;  // which identity/property the check exercises
  int points = 0;      // sampled points (0 for single closed-form checks)
  bool exact = true;   // exact-arithmetic check vs float monitor
  std::string residual = "0";  // exact residual ("0" or the polynomial/value)
  double residual_f = 0;       // float residual for monitors
  bool pass = false;
  bool informational = false;  // recorded but never fails the suite
  std::string note;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  // Stable serialization: checks sorted by name, keys sorted.
  std::string to_json_string() const;
};

}  // namespace elv::report
