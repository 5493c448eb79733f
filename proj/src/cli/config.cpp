#include "config.hpp"

#include <charconv>
#include <fstream>
#include <map>

namespace multlag::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw ConfigError("invalid number '" + text + "' for " + what);
  }
  return value;
}

}  // namespace

Potential parse_potential(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = trim(spec.substr(0, colon));
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item = trim(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (!item.empty()) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("potential parameter '" + item + "' needs key=value");
        const std::string key = trim(item.substr(0, eq));
        if (params.count(key)) throw ConfigError("duplicate potential parameter '" + key + "'");
        params[key] = parse_number(trim(item.substr(eq + 1)), "potential parameter " + key);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  auto take = [&params](const std::string& key, double fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    const double value = it->second;
    params.erase(it);
    return value;
  };
  Potential pot;
  if (kind == "free") {
    pot = Potential(Free{});
  } else if (kind == "harmonic") {
    const double m = take("m", 1.0);
    pot = Potential(Harmonic{m, take("omega", 1.0)});
  } else if (kind == "pair-harmonic") {
    pot = Potential(PairHarmonic{take("g", 1.0)});
  } else if (kind == "calogero-moser") {
    pot = Potential(CalogeroMoser{take("g", 1.0)});
  } else if (kind == "polynomial") {
    Polynomial poly;
    for (int k = 0; !params.empty() && k < 64; ++k) {
      const std::string key = "c" + std::to_string(k);
      poly.coeffs.push_back(take(key, 0.0));
    }
    pot = Potential(poly);
  } else {
    throw ConfigError("unknown potential kind '" + kind + "'");
  }
  if (!params.empty()) throw ConfigError("unknown parameter '" + params.begin()->first + "' for potential " + kind);
  return pot;
}

Model make_model(const ScenarioConfig& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family) throw ConfigError("unknown family '" + cfg.family + "'");
  Model model;
  model.family = *family;
  model.order = cfg.j;
  model.params = {cfg.mass, cfg.lambda, cfg.c};
  model.potential = parse_potential(cfg.potential);
  model.validate();
  return model;
}

GridSpec make_grid(const ScenarioConfig& cfg) {
  GridSpec grid{cfg.x_min, cfg.x_max, cfg.v_min, cfg.v_max, cfg.grid};
  grid.validate();
  return grid;
}

std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(number) + ": empty key");
    args.push_back("--" + key);
    args.push_back(trim(line.substr(eq + 1)));
  }
  return args;
}

}  // namespace multlag::cli
