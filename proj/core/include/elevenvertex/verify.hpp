#pragma once

#include "elevenvertex/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace elv::verify {

struct Options {
  uint64_t seed = 1;
  // Name of an intentional corruption for negative-control runs ("" = none).
  std::string fault;
};

std::vector<std::string> suite_names();
report::Report run_suite(const std::string& name, const Options& opt);

}  // namespace elv::verify
