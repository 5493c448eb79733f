#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multlag/eom.hpp"

namespace multlag::cli {

/// Thrown for malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every option of every command. Commands read the fields they need.
struct ScenarioConfig {
  std::string family = "add-nr";
  int j = 1;
  double mass = 1.0;
  double lambda = 1.0;
  double c = 1.0;
  std::string potential = "harmonic:m=1,omega=1";

  double x_min = -1.0;
  double x_max = 1.0;
  double v_min = -1.0;
  double v_max = 1.0;
  int grid = 21;
  bool x_range_set = false;
  bool v_range_set = false;

  std::string formulation = "lagrangian";
  double tol = -1.0;  // negative: the suite default
  int samples = 100;
  std::uint64_t seed = 1;

  double x = 0.5;
  double v = 0.3;
  double p = 0.3;
  double omega = 1.0;
  int l = 1;
  int J = 12;

  std::string system = "one";
  std::string flow = "kinematic";
  std::string method = "rk4";
  std::string exponent = "mirrored";
  double x0 = 1.0;
  double v0 = 0.0;
  double p0 = 0.0;
  bool p0_set = false;
  double X0 = 0.0;
  double vX0 = 0.0;
  double dt = 1e-3;
  int steps = 1000;
  int stride = 1;
  double rk45_tol = 1e-10;
  std::string output;
};

/// Parses "kind" or "kind:key=value,key=value".
Potential parse_potential(const std::string& spec);

/// Builds and validates the model described by the config.
Model make_model(const ScenarioConfig& cfg);

GridSpec make_grid(const ScenarioConfig& cfg);

/**
 * Reads "key = value" lines ('#' starts a comment) and returns them as
 * "--key" "value" argument pairs.
 */
std::vector<std::string> config_file_args(const std::string& path);

}  // namespace multlag::cli
