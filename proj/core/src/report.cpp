#include "elevenvertex/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace elv::report {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass || c.informational; });
}

std::string Report::to_json_string() const {
  std::vector<Check> sorted = checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  nlohmann::json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["all_pass"] = all_pass();
  auto arr = nlohmann::json::array();
  for (const Check& c : sorted) {
    nlohmann::json j;
    j["name"] = c.name;
    j["target"] = c.target;
    j["points"] = c.points;
    j["exact"] = c.exact;
    if (c.exact)
      j["residual"] = c.residual;
    else
      j["residual"] = c.residual_f;
    j["pass"] = c.pass;
    if (c.informational) j["informational"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  return out.dump(2) + "\n";
}

}  // namespace elv::report
