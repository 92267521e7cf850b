#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elv::simulate {

struct SimConfig {
  std::string model;  // top | top-eta | rs | cm | gaudin | ll | chiral | ll-gaudin
  uint64_t seed = 1;
  double dt = 1e-3;
  long steps = 1000;
  long stride = 10;  // snapshot every this many steps
  int grid_n = 128;
  double ell = 6.283185307179586;
  double lam = 1.0;
  double k = 1.0;
  double eta = 1.0;
  double c = 10.0;
  double nu = 1.0;
  double eps = 1.0;
  std::vector<double> z_sites;
  bool cross_check = false;
  std::string out_dir = ".";
};

struct SimResult {
  bool ok = true;
  std::string message;      // failure/abort detail
  std::string csv_path;     // trajectory
  std::string summary_path; // monitor summary (json)
  std::string summary_json; // same content, for tests
};

SimResult run(const SimConfig& cfg);

}  // namespace elv::simulate
