#include "report.hpp"

#include <cmath>

#include "json.hpp"

namespace multlag::cli {

using ordered_json = nlohmann::ordered_json;

void Report::at_most(const std::string& name, double value, double tolerance) {
  add(name, value, tolerance, value <= tolerance);
}

void Report::near(const std::string& name, double value, double target, double tolerance) {
  add(name, value, tolerance, std::fabs(value - target) <= tolerance);
}

void Report::add(const std::string& name, double value, double tolerance, bool pass) {
  checks.push_back({name, value, tolerance, pass});
}

bool Report::pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

// Non-finite values have no JSON number form.
ordered_json number(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

}  // namespace

std::string Report::to_json() const {
  ordered_json root;
  root["suite"] = suite;
  root["checks"] = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json item;
    item["name"] = c.name;
    item["value"] = number(c.value);
    item["tolerance"] = number(c.tolerance);
    item["pass"] = c.pass;
    root["checks"].push_back(std::move(item));
  }
  root["pass"] = pass();
  return root.dump(2) + "\n";
}

std::string error_json(const std::string& code, const std::string& message, int exit_code) {
  ordered_json root;
  root["error"]["code"] = code;
  root["error"]["message"] = message;
  root["error"]["exit_code"] = exit_code;
  return root.dump(2) + "\n";
}

}  // namespace multlag::cli
