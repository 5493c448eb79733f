#include "multlag/eom.hpp"

#include <algorithm>
#include <cmath>

namespace multlag {

double acceleration_from_lagrangian(const Model& model, double x, double v) {
  const SecondDerivs d = lagrangian_derivs(model, x, v);
  if (!std::isfinite(d.fvv)) {
    fail(ErrorCode::DomainError, "non-finite d2L/dv2 at x = " + std::to_string(x) + ", v = " + std::to_string(v));
  }
  if (!(std::fabs(d.fvv) >= kHessianFloor * model.params.mass)) {
    fail(ErrorCode::DegenerateHessian, "d2L/dv2 = " + std::to_string(d.fvv) + " at x = " + std::to_string(x) +
                                           ", v = " + std::to_string(v));
  }
  return (d.fx - v * d.fxv) / d.fvv;
}

double reference_acceleration(Reference kind, const ModelParams& params, const Potential& pot, double x,
                              double v) {
  const double force = -pot.derivative(x);
  if (kind == Reference::Newtonian) return force / params.mass;
  const double gamma = lorentz_gamma(v, params.c);
  return force / (params.mass * gamma * gamma * gamma);
}

PhaseRate hamilton_rhs(const Model& model, double x, double p) {
  const SecondDerivs d = hamiltonian_derivs(model, x, p);
  return {d.fv, -d.fx};
}

namespace {

struct KinematicTerms {
  double numerator = 0.0;
  double denominator = 0.0;
};

KinematicTerms kinematic_terms(const Model& model, double x, double p) {
  const SecondDerivs d = hamiltonian_derivs(model, x, p);
  const double m = model.params.mass;
  double mu = m;
  double dmu = 0.0;
  if (is_relativistic(model.family)) {
    const double gamma = momentum_gamma(p, m, model.params.c);
    mu = gamma * m;
    dmu = p / (m * model.params.c * model.params.c * gamma);
  }
  return {-d.fx - p * d.fxv, dmu * d.fv + mu * d.fvv};
}

}  // namespace

double momentum_rate_kinematic(const Model& model, double x, double p) {
  const KinematicTerms k = kinematic_terms(model, x, p);
  if (std::fabs(k.denominator) >= kHessianFloor) return k.numerator / k.denominator;
  // For H = Phi(H_std) numerator and denominator share the factor
  // Phi' + Phi'' p dH_std/dp, so a zero of it is removable. Take the limit
  // from both sides and accept it only when they agree.
  const double delta = kRemovableStep * std::max(1.0, std::fabs(p));
  const KinematicTerms lo = kinematic_terms(model, x, p - delta);
  const KinematicTerms hi = kinematic_terms(model, x, p + delta);
  if (std::fabs(lo.denominator) >= kHessianFloor && std::fabs(hi.denominator) >= kHessianFloor) {
    const double left = lo.numerator / lo.denominator;
    const double right = hi.numerator / hi.denominator;
    if (std::fabs(left - right) <= 1e-6 * std::max(1.0, std::fabs(left) + std::fabs(right))) {
      return 0.5 * (left + right);
    }
  }
  fail(ErrorCode::DegenerateHessian, "kinematic momentum equation is singular at x = " + std::to_string(x) +
                                         ", p = " + std::to_string(p));
}

PhaseRate kinematic_rhs(const Model& model, double x, double p) {
  return {kinetic_velocity(model, p), momentum_rate_kinematic(model, x, p)};
}

double acceleration_from_hamiltonian(const Model& model, double x, double v) {
  const double p = kinetic_momentum(model, v);
  const double pdot = momentum_rate_kinematic(model, x, p);
  if (!is_relativistic(model.family)) return pdot / model.params.mass;
  const double gamma = momentum_gamma(p, model.params.mass, model.params.c);
  return pdot / (model.params.mass * gamma * gamma * gamma);
}

void GridSpec::validate() const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "grid needs n >= 1");
  if (!(x_min <= x_max) || !(v_min <= v_max)) fail(ErrorCode::InvalidArgument, "grid ranges must be ordered");
  if (n == 1 && (x_min != x_max || v_min != v_max)) {
    fail(ErrorCode::InvalidArgument, "a 1-point grid needs degenerate ranges");
  }
}

namespace {

double node(double lo, double hi, int i, int n) {
  if (n == 1) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * i / (n - 1);
}

}  // namespace

double GridSpec::x_at(int i) const { return node(x_min, x_max, i, n); }
double GridSpec::v_at(int i) const { return node(v_min, v_max, i, n); }

EomReport eom_equivalence_scan(const Model& model, Reference reference, const GridSpec& grid,
                               Formulation formulation) {
  grid.validate();
  model.validate();
  GridSpec g = grid;
  if (is_relativistic(model.family) || reference == Reference::Relativistic) {
    const double limit = (1.0 - kLightConeMargin) * model.params.c;
    g.v_min = std::clamp(g.v_min, -limit, limit);
    g.v_max = std::clamp(g.v_max, -limit, limit);
  }
  EomReport report;
  report.grid_size = g.n * g.n;
  for (int i = 0; i < g.n; ++i) {
    const double x = g.x_at(i);
    for (int k = 0; k < g.n; ++k) {
      const double v = g.v_at(k);
      double a = 0.0;
      try {
        a = formulation == Formulation::Lagrangian ? acceleration_from_lagrangian(model, x, v)
                                                   : acceleration_from_hamiltonian(model, x, v);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateHessian) throw;
        ++report.degenerate_points_skipped;
        continue;
      }
      const double residual = std::fabs(a - reference_acceleration(reference, model.params, model.potential, x, v));
      if (!std::isnan(report.max_abs_residual) && (std::isnan(residual) || residual > report.max_abs_residual)) {
        report.max_abs_residual = residual;
        report.worst_x = x;
        report.worst_v = v;
      }
    }
  }
  return report;
}

}  // namespace multlag
