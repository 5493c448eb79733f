#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "format.hpp"
#include "multlag/hamiltonians.hpp"
#include "multlag/hierarchy.hpp"
#include "multlag/limits.hpp"

namespace multlag::cli {

namespace {

double tolerance_or(const ScenarioConfig& cfg, double fallback) { return cfg.tol > 0.0 ? cfg.tol : fallback; }

void add_eom_report(Report& report, const std::string& prefix, const EomReport& r, double tol) {
  report.at_most(prefix + "max_abs_residual", r.max_abs_residual, tol);
  report.add(prefix + "degenerate_points_skipped", r.degenerate_points_skipped, r.grid_size,
             r.degenerate_points_skipped <= r.grid_size);
}

double relative_error(double value, double reference) {
  return std::fabs(value - reference) / std::max(std::fabs(reference), 1e-300);
}

Method parse_method(const std::string& name) {
  if (name == "rk4") return Method::RK4;
  if (name == "rk45") return Method::RK45;
  throw ConfigError("unknown method '" + name + "' (rk4 or rk45)");
}

HamiltonFlow parse_flow(const std::string& name) {
  if (name == "kinematic") return HamiltonFlow::Kinematic;
  if (name == "canonical") return HamiltonFlow::Canonical;
  throw ConfigError("unknown flow '" + name + "' (kinematic or canonical)");
}

TwoBodyExponent parse_exponent(const std::string& name) {
  if (name == "mirrored") return TwoBodyExponent::Mirrored;
  if (name == "as-printed") return TwoBodyExponent::AsPrinted;
  throw ConfigError("unknown exponent '" + name + "' (mirrored or as-printed)");
}

IntegrationOptions make_options(const ScenarioConfig& cfg) {
  IntegrationOptions options;
  options.dt = cfg.dt;
  options.n_steps = cfg.steps;
  options.method = parse_method(cfg.method);
  options.stride = cfg.stride;
  options.flow = parse_flow(cfg.flow);
  options.rk45_tol = cfg.rk45_tol;
  options.validate();
  return options;
}

}  // namespace

Report verify_eom(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  const GridSpec grid = make_grid(cfg);
  const double tol = tolerance_or(cfg, 1e-8);
  Report report{"eom", {}};
  const Reference reference = reference_for(model.family);
  if (cfg.formulation == "lagrangian" || cfg.formulation == "both") {
    add_eom_report(report, "", eom_equivalence_scan(model, reference, grid, Formulation::Lagrangian), tol);
  }
  if (cfg.formulation == "hamiltonian" || cfg.formulation == "both") {
    add_eom_report(report, "hamiltonian_", eom_equivalence_scan(model, reference, grid, Formulation::Hamiltonian),
                   tol);
  }
  return report;
}

Report verify_legendre(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  const GridSpec grid = make_grid(cfg);
  double v_lo = grid.v_min;
  double v_hi = grid.v_max;
  if (is_relativistic(model.family)) {
    v_lo = std::max(v_lo, -0.9 * model.params.c);
    v_hi = std::min(v_hi, 0.9 * model.params.c);
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> xs(grid.x_min, grid.x_max);
  std::uniform_real_distribution<double> vs(v_lo, v_hi);
  double worst = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = xs(rng);
    const double v = vs(rng);
    const double closed = hamiltonian(model, x, kinetic_momentum(model, v));
    worst = std::max(worst, relative_error(legendre_numeric(model, x, v), closed));
  }
  Report report{"legendre", {}};
  report.at_most("max_rel_deviation", worst, tolerance_or(cfg, 1e-10));
  return report;
}

Report verify_limits(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  const LimitPoint at{cfg.x, cfg.v, 0.0};
  const LimitPoint at_p{cfg.x, cfg.p, 0.0};
  const double tol = tolerance_or(cfg, 0.1);
  Report report{"limits", {}};
  const std::pair<LimitKind, const LimitPoint*> lambda_limits[] = {{LimitKind::LagrangianNR, &at},
                                                                   {LimitKind::HamiltonianNR, &at_p},
                                                                   {LimitKind::LagrangianRel, &at},
                                                                   {LimitKind::HamiltonianRel, &at_p}};
  for (const auto& [kind, point] : lambda_limits) {
    const LimitFit fit = fit_lambda_limit(kind, model.params, model.potential, *point, 4, 10);
    report.near(std::string("lambda_slope_") + limit_name(kind), fit.slope, -2.0, tol);
  }
  const LimitFit lc = fit_c_limit(false, model.params, model.potential, at, 2, 8);
  report.near("c_slope_lagrangian", lc.slope, -2.0, tol);
  const LimitFit hc = fit_c_limit(true, model.params, model.potential, at_p, 2, 8);
  report.near("c_slope_hamiltonian", hc.slope, -2.0, tol);
  const LimitFit dbl = fit_double_limit(model.params, model.potential, at, 4, 8);
  double worst_ratio = 0.0;
  for (std::size_t i = 1; i < dbl.deviations.size(); ++i) {
    worst_ratio = std::max(worst_ratio, dbl.deviations[i] / dbl.deviations[i - 1]);
  }
  report.add("double_limit_max_ratio", worst_ratio, 1.0, worst_ratio < 1.0);
  return report;
}

Report verify_hierarchy(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  Report report{"hierarchy", {}};
  const std::vector<std::vector<Rational>> printed = {
      {Rational(1), Rational(-1)},
      {Rational(1, 3), Rational(2), Rational(-1)},
      {Rational(1, 5), Rational(1), Rational(3), Rational(-1)},
  };
  for (int j = 1; j <= 3; ++j) {
    const std::vector<Rational> table = hier_coefficients_nr(j);
    const bool same = table == printed[j - 1];
    report.add("table_j" + std::to_string(j) + "_mismatches", same ? 0.0 : 1.0, 0.0, same);
  }
  int failures = 0;
  int iterated_failures = iterated_recurrence_exact_nr(1) ? 0 : 1;
  for (int j = 2; j <= kMaxHierarchyOrder; ++j) {
    if (!recurrence_exact_nr(j)) ++failures;
    if (!iterated_recurrence_exact_nr(j)) ++iterated_failures;
  }
  report.add("recurrence_exact_failures", failures, 0.0, failures == 0);
  report.add("iterated_recurrence_exact_failures", iterated_failures, 0.0, iterated_failures == 0);
  for (int j = 2; j <= 6; ++j) {
    const RecurrenceReport nr = recurrence_check_nr(j, cfg.samples, cfg.seed);
    report.at_most("recurrence_float_j" + std::to_string(j), std::max(nr.max_rel_deviation, nr.max_rel_deviation_iterated),
                   1e-12);
    const RecurrenceReport rel = recurrence_check_rel(model.params, j, 20, cfg.seed);
    report.at_most("recurrence_rel_j" + std::to_string(j), rel.max_rel_deviation, 1e-10);
  }
  const double tol = tolerance_or(cfg, 1e-8);
  report.at_most("series_nr_relative",
                 series_reconstruct_nr(model.params, model.potential, cfg.x, cfg.v, cfg.J).relative(), tol);
  report.at_most("series_rel_relative",
                 series_reconstruct_rel(model.params, model.potential, cfg.x, cfg.v, cfg.J).relative(), tol);
  // The J = 15 truncation meets 1e-12 only for |H| <= m lambda^2; points
  // outside are reported as skipped with their radius.
  const double ml2 = model.params.mass * model.params.lambda * model.params.lambda;
  for (const bool rel : {false, true}) {
    const std::string name = std::string("hamiltonian_series_") + (rel ? "rel" : "nr");
    const double h = rel ? H_additive_rel(model.params, model.potential, cfg.x, cfg.p)
                         : H_additive_nr(model.params, model.potential, cfg.x, cfg.p);
    const double radius = std::fabs(h) / ml2;
    if (radius > 1.0) {
      report.add(name + "_skipped_radius", radius, 1.0, true);
      continue;
    }
    report.at_most(name + "_relative_J15",
                   hamiltonian_series(model.params, model.potential, cfg.x, cfg.p, 15, rel).relative(), 1e-12);
  }
  return report;
}

Report verify_lax(const ScenarioConfig& cfg) {
  if (cfg.l < 1) throw ConfigError("l must be >= 1");
  const LaxResult r = lax_invariant_check(cfg.omega, cfg.x, cfg.p, cfg.l);
  const double tol = tolerance_or(cfg, 1e-12);
  const double rel = relative_error(r.trace, r.expected);
  Report report{"lax", {}};
  report.add("trace", r.trace, tol, rel <= tol);
  report.add("expected", r.expected, tol, rel <= tol);
  report.at_most("trace_relative_error", rel, tol);
  report.add("odd_trace", r.odd_trace, tol, std::fabs(r.odd_trace) <= tol);
  return report;
}

Report verify_twobody(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  const TwoBodyExponent exponent = parse_exponent(cfg.exponent);
  TwoBodyGrid grid;
  if (cfg.x_range_set) {
    grid.x_min = cfg.x_min;
    grid.x_max = cfg.x_max;
  }
  if (cfg.v_range_set) {
    grid.v_min = cfg.v_min;
    grid.v_max = cfg.v_max;
  }
  grid.n = std::min(cfg.grid, 11);
  Report report{"twobody", {}};
  const TwoBodyEomReport eom = twobody_eom_check(model.params, model.potential, grid);
  report.at_most("center_of_mass_residual", eom.center_of_mass.max_abs_residual, 1e-10);
  report.at_most("relative_residual", eom.relative.max_abs_residual, 1e-9);

  IntegrationOptions options = make_options(cfg);
  const double m = model.params.mass;
  const TwoBodyTrajectory ham = integrate_twobody_hamiltonian(model.params, model.potential, cfg.X0, cfg.x0,
                                                              m * cfg.vX0, m * cfg.v0, options, exponent);
  const TwoBodyTrajectory ref =
      integrate_twobody_reference(model.params, model.potential, cfg.X0, cfg.x0, cfg.vX0, cfg.v0, options);
  double p_drift = 0.0;
  double x_dev = 0.0;
  const std::size_t n = std::min(ham.samples.size(), ref.samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    p_drift = std::max(p_drift, std::fabs(ham.samples[i].P - ham.samples[0].P));
    x_dev = std::max(x_dev, std::fabs(ham.samples[i].x - ref.samples[i].x));
  }
  report.add("hamiltonian_run_completed", ham.aborted ? 0.0 : 1.0, 1.0, !ham.aborted && !ref.aborted);
  report.at_most("P_drift", p_drift, 1e-12);
  report.at_most("relative_trajectory_deviation", x_dev, 1e-7);

  const LimitPoint at{cfg.x, cfg.v, cfg.vX0};
  const LimitPoint at_p{cfg.x, cfg.p, m * cfg.vX0};
  const LimitFit lf = fit_lambda_limit(LimitKind::TwoBodyLagrangian, model.params, model.potential, at, 4, 10);
  report.near("lambda_slope_twobody_lagrangian", lf.slope, -2.0, 0.1);
  const LimitFit hf =
      fit_lambda_limit(LimitKind::TwoBodyHamiltonian, model.params, model.potential, at_p, 4, 10, exponent);
  report.near("lambda_slope_twobody_hamiltonian", hf.slope, -2.0, 0.1);
  return report;
}

void validate_integrate(const ScenarioConfig& cfg) {
  if (cfg.system != "one" && cfg.system != "two") throw ConfigError("system must be one or two");
  if (cfg.formulation != "lagrangian" && cfg.formulation != "hamiltonian" && cfg.formulation != "reference") {
    throw ConfigError("formulation must be lagrangian, hamiltonian or reference");
  }
  make_model(cfg);
  make_options(cfg);
  parse_exponent(cfg.exponent);
}

Report integrate(const ScenarioConfig& cfg, std::ostream& csv_out) {
  validate_integrate(cfg);
  const Model model = make_model(cfg);
  const IntegrationOptions options = make_options(cfg);
  Report report{"integrate", {}};
  const double tol = tolerance_or(cfg, 1e-6);
  if (cfg.system == "two") {
    const double m = model.params.mass;
    TwoBodyTrajectory traj;
    if (cfg.formulation == "lagrangian") {
      traj = integrate_twobody_lagrangian(model.params, model.potential, cfg.X0, cfg.x0, cfg.vX0, cfg.v0, options);
    } else if (cfg.formulation == "hamiltonian") {
      const double p0 = cfg.p0_set ? cfg.p0 : m * cfg.v0;
      traj = integrate_twobody_hamiltonian(model.params, model.potential, cfg.X0, cfg.x0, m * cfg.vX0, p0, options,
                                           parse_exponent(cfg.exponent));
    } else {
      traj = integrate_twobody_reference(model.params, model.potential, cfg.X0, cfg.x0, cfg.vX0, cfg.v0, options);
    }
    write_twobody_csv(csv_out, traj);
    const double h0 = traj.samples.front().h_model;
    double drift = 0.0;
    for (const TwoBodySample& s : traj.samples) drift = std::max(drift, std::fabs(s.h_model - h0));
    drift /= std::max(std::fabs(h0), 1e-300);
    report.add("completed", traj.aborted ? 0.0 : 1.0, 1.0, !traj.aborted);
    report.at_most("conserved_drift", drift, tol);
    return report;
  }
  Trajectory traj;
  if (cfg.formulation == "lagrangian") {
    traj = integrate_lagrangian(model, cfg.x0, cfg.v0, options);
  } else if (cfg.formulation == "hamiltonian") {
    const double p0 = cfg.p0_set ? cfg.p0 : kinetic_momentum(model, cfg.v0);
    traj = integrate_hamiltonian(model, cfg.x0, p0, options);
  } else {
    traj = integrate_reference(reference_for(model.family), model.params, model.potential, cfg.x0, cfg.v0, options);
  }
  write_trajectory_csv(csv_out, traj);
  report.add("completed", traj.aborted ? 0.0 : 1.0, 1.0, !traj.aborted);
  report.at_most("conserved_drift", conserved_drift(traj), tol);
  return report;
}

void hierarchy_table(const ScenarioConfig& cfg, std::ostream& out) {
  if (cfg.j < 1 || cfg.j > kMaxHierarchyOrder) throw ConfigError("j must be in [1, 20]");
  out << hierarchy_table_csv(cfg.j);
}

Report hierarchy_reconstruct(const ScenarioConfig& cfg) {
  const Model model = make_model(cfg);
  const bool relativistic = is_relativistic(model.family);
  if (cfg.J < 1 || (!relativistic && cfg.J > kMaxHierarchyOrder)) throw ConfigError("J must be in [1, 20]");
  Report report{relativistic ? "hierarchy-reconstruct-rel" : "hierarchy-reconstruct-nr", {}};
  double previous = INFINITY;
  SeriesResult last;
  for (int J = 0; J <= cfg.J; ++J) {
    last = relativistic ? series_reconstruct_rel(model.params, model.potential, cfg.x, cfg.v, J)
                        : series_reconstruct_nr(model.params, model.potential, cfg.x, cfg.v, J);
    // Residuals below round-off no longer decay; only the trend above it is checked.
    const double floor = 1e-15 * std::fabs(last.target);
    report.add("residual_J" + std::to_string(J), last.residual, previous,
               last.residual <= previous || last.residual <= floor);
    previous = std::max(last.residual, floor);
  }
  report.at_most("relative_residual", last.relative(), tolerance_or(cfg, 1e-8));
  return report;
}

}  // namespace multlag::cli
