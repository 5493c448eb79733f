#pragma once

#include <string>
#include <vector>

namespace multlag::cli {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  /// value <= tolerance.
  void at_most(const std::string& name, double value, double tolerance);
  /// |value - target| <= tolerance.
  void near(const std::string& name, double value, double target, double tolerance);
  void add(const std::string& name, double value, double tolerance, bool pass);

  bool pass() const;
  /// {suite, checks: [{name, value, tolerance, pass}], pass}, indented, trailing newline.
  std::string to_json() const;
};

/// {"error": {"code", "message", "exit_code"}}.
std::string error_json(const std::string& code, const std::string& message, int exit_code);

}  // namespace multlag::cli
