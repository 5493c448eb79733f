#include "app.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace multlag::cli {

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

// Options shared by every leaf command.
void add_model_options(CLI::App* app, ScenarioConfig& cfg) {
  app->add_option("--family", cfg.family, "add-nr, mult-nr, hier-nr, add-rel, mult-rel or hier-rel");
  app->add_option("--j", cfg.j, "hierarchy order");
  app->add_option("--mass", cfg.mass);
  app->add_option("--lambda", cfg.lambda);
  app->add_option("--c", cfg.c, "speed of light");
  app->add_option("--potential", cfg.potential, "kind:key=value,... (free, harmonic, pair-harmonic, "
                                                "calogero-moser, polynomial)");
  app->add_option("--tol", cfg.tol, "override the suite tolerance");
}

void add_grid_options(CLI::App* app, ScenarioConfig& cfg) {
  app->add_option("--x-min", cfg.x_min);
  app->add_option("--x-max", cfg.x_max);
  app->add_option("--v-min", cfg.v_min);
  app->add_option("--v-max", cfg.v_max);
  app->add_option("--grid", cfg.grid, "points per axis");
  app->add_option("--samples", cfg.samples);
  app->add_option("--seed", cfg.seed);
}

void add_point_options(CLI::App* app, ScenarioConfig& cfg) {
  app->add_option("--x", cfg.x);
  app->add_option("--v", cfg.v);
  app->add_option("--p", cfg.p);
}

void add_run_options(CLI::App* app, ScenarioConfig& cfg) {
  app->add_option("--x0", cfg.x0);
  app->add_option("--v0", cfg.v0);
  app->add_option("--p0", cfg.p0, "initial momentum (default: kinetic momentum of v0)");
  app->add_option("--X0", cfg.X0, "initial center-of-mass coordinate");
  app->add_option("--vX0", cfg.vX0, "initial center-of-mass velocity");
  app->add_option("--dt", cfg.dt);
  app->add_option("--steps", cfg.steps);
  app->add_option("--stride", cfg.stride);
  app->add_option("--method", cfg.method, "rk4 or rk45");
  app->add_option("--rk45-tol", cfg.rk45_tol);
  app->add_option("--flow", cfg.flow, "kinematic or canonical");
  app->add_option("--exponent", cfg.exponent, "two-body H exponent: mirrored or as-printed");
}

// The path of subcommand names at the front of argv.
std::size_t subcommand_depth(const std::vector<std::string>& args) {
  std::size_t depth = 0;
  while (depth < args.size() && depth < 2 && !args[depth].empty() && args[depth][0] != '-') ++depth;
  return depth;
}

// Moves "--config FILE" out of args and splices the file's settings in
// right after the subcommand path, so that later flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string value;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file");
      value = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      value = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      continue;
    }
    if (!path.empty()) throw ConfigError("--config given twice");
    path = value;
    --i;
  }
  if (path.empty()) return args;
  const std::vector<std::string> extra = config_file_args(path);
  args.insert(args.begin() + subcommand_depth(args), extra.begin(), extra.end());
  return args;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  ScenarioConfig cfg;
  CLI::App app{"Multiplicative Lagrangians and their hierarchies: verification suites and trajectories", "multlag"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify->require_subcommand(1);
  CLI::App* v_eom = verify->add_subcommand("eom", "acceleration from the model against the reference EOM");
  CLI::App* v_leg = verify->add_subcommand("legendre", "v dL/dv - L against the closed-form H");
  CLI::App* v_lim = verify->add_subcommand("limits", "lambda and c limits to the additive forms");
  CLI::App* v_hier = verify->add_subcommand("hierarchy", "coefficient tables, recurrences and series");
  CLI::App* v_lax = verify->add_subcommand("lax", "traces of powers of the oscillator Lax matrix");
  CLI::App* v_two = verify->add_subcommand("twobody", "two-particle Lagrangian and Hamiltonian");
  CLI::App* integ = app.add_subcommand("integrate", "integrate a trajectory and write CSV");
  CLI::App* hier = app.add_subcommand("hierarchy", "hierarchy coefficient tables and series");
  hier->require_subcommand(1);
  CLI::App* h_table = hier->add_subcommand("table", "CSV of the coefficients of one member");
  CLI::App* h_recon = hier->add_subcommand("reconstruct", "partial-sum residuals against the closed form");

  for (CLI::App* leaf : {v_eom, v_leg, v_lim, v_hier, v_lax, v_two, integ, h_table, h_recon}) {
    add_model_options(leaf, cfg);
  }
  for (CLI::App* leaf : {v_eom, v_leg, v_two, v_hier}) add_grid_options(leaf, cfg);
  v_eom->add_option("--formulation", cfg.formulation, "lagrangian, hamiltonian or both");
  for (CLI::App* leaf : {v_lim, v_hier, v_lax, v_two, h_recon}) add_point_options(leaf, cfg);
  v_lax->add_option("--omega", cfg.omega);
  v_lax->add_option("--l", cfg.l);
  h_recon->add_option("--J", cfg.J, "highest order in the partial sum");
  add_run_options(integ, cfg);
  add_run_options(v_two, cfg);
  integ->add_option("--system", cfg.system, "one or two particles");
  integ->add_option("--formulation", cfg.formulation, "lagrangian, hamiltonian or reference");
  integ->add_option("--output", cfg.output, "CSV path (default: stdout, summary to stderr)");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const ConfigError& e) {
    out << error_json("ConfigError", e.what(), kExitConfig);
    return kExitConfig;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json("ParseError", e.what(), kExitConfig);
    return kExitConfig;
  }
  auto given = [](CLI::App* a, const char* name) {
    const CLI::Option* opt = a->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  cfg.x_range_set = given(v_two, "--x-min") || given(v_two, "--x-max");
  cfg.v_range_set = given(v_two, "--v-min") || given(v_two, "--v-max");
  cfg.p0_set = given(integ, "--p0");

  Report report;
  try {
    try {
      if (v_eom->parsed()) {
        report = verify_eom(cfg);
      } else if (v_leg->parsed()) {
        report = verify_legendre(cfg);
      } else if (v_lim->parsed()) {
        report = verify_limits(cfg);
      } else if (v_hier->parsed()) {
        report = verify_hierarchy(cfg);
      } else if (v_lax->parsed()) {
        report = verify_lax(cfg);
      } else if (v_two->parsed()) {
        report = verify_twobody(cfg);
      } else if (h_table->parsed()) {
        hierarchy_table(cfg, out);
        return 0;
      } else if (h_recon->parsed()) {
        report = hierarchy_reconstruct(cfg);
      } else if (integ->parsed()) {
        validate_integrate(cfg);
        if (cfg.output.empty()) {
          report = integrate(cfg, out);
          err << report.to_json();
          return report.pass() ? 0 : kExitCheckFailed;
        }
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) throw ConfigError("cannot write '" + cfg.output + "'");
        report = integrate(cfg, file);
      }
    } catch (const Error& e) {
      // Parameter validation failures are configuration errors; the rest
      // happened while running.
      const bool config = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::NonPositiveLambda ||
                          e.code() == ErrorCode::Overflow;
      if (config) throw ConfigError(e.what());
      throw;
    }
  } catch (const ConfigError& e) {
    out << error_json("ConfigError", e.what(), kExitConfig);
    return kExitConfig;
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.code())), e.what(), kExitCheckFailed);
    return kExitCheckFailed;
  }
  out << report.to_json();
  return report.pass() ? 0 : kExitCheckFailed;
}

}  // namespace multlag::cli
