#include "multlag/twobody.hpp"

#include <array>
#include <algorithm>
#include <cmath>

#include "multlag/eom.hpp"
#include "multlag/ode.hpp"

namespace multlag {

double L2_mult_shifted(const ModelParams& params, const Potential& pot, double x, double vX, double vx) {
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  auto f_minus_one = [&](double u) {
    return std::expm1(-u * u / (2.0 * l2)) + u / l2 * gauss_velocity_integral(u, params.lambda);
  };
  const double a = -2.0 * pot.value(x) / ml2;
  return 0.5 * ml2 * (f_minus_one(vX) + f_minus_one(vx) * std::exp(a) + std::expm1(a));
}

double H2_mult_shifted(const ModelParams& params, const Potential& pot, double x, double P, double p,
                       TwoBodyExponent exponent) {
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double mm2l2 = 2.0 * params.mass * ml2;
  const double weight = exponent == TwoBodyExponent::Mirrored ? 2.0 : 1.0;
  const double a = -weight * pot.value(x) / ml2;
  return -0.5 * ml2 *
         (std::expm1(-P * P / mm2l2) + std::expm1(-p * p / mm2l2) * std::exp(a) + std::expm1(a));
}

namespace {

using Vars = std::array<double, 4>;

// Evaluates f on the four variables with variable i seeded as the first
// jet direction and k as the second; i == k seeds one variable only.
template <class F>
HyperDual seeded(F& f, const Vars& vars, int i, int k) {
  std::array<HyperDual, 4> args{vars[0], vars[1], vars[2], vars[3]};
  args[i].e1 = 1.0;
  if (k != i) args[k].e2 = 1.0;
  return f(args[0], args[1], args[2], args[3]);
}

struct Solved {
  double first = 0.0;
  double second = 0.0;
};

Solved solve2(double a, double b, double c, double d, double r0, double r1, double floor) {
  const double det = a * d - b * c;
  if (!(std::fabs(det) >= floor)) fail(ErrorCode::DegenerateHessian, "two-body Hessian is singular");
  return {(r0 * d - b * r1) / det, (a * r1 - c * r0) / det};
}

// For vars (q0, q1, w0, w1) solves
//   scale * f_ww z = sign * f_q - f_wq c
// for z, with f_wq c summed over the coupling vector c. The Euler-Lagrange
// system uses c = velocities, sign = +1; the kinematic Hamilton flow uses
// c = momenta, sign = -1 and scale = m.
template <class F>
Solved second_order_solve(F& f, const Vars& vars, const std::array<double, 2>& coupling, double hessian_scale,
                          double floor, double sign) {
  const HyperDual ww = seeded(f, vars, 2, 3);
  const HyperDual q0w0 = seeded(f, vars, 0, 2);
  const HyperDual q1w1 = seeded(f, vars, 1, 3);
  const HyperDual q1w0 = seeded(f, vars, 1, 2);
  const HyperDual q0w1 = seeded(f, vars, 0, 3);
  const double r0 = sign * q0w0.e1 - (q0w0.e12 * coupling[0] + q1w0.e12 * coupling[1]);
  const double r1 = sign * q1w1.e1 - (q0w1.e12 * coupling[0] + q1w1.e12 * coupling[1]);
  return solve2(hessian_scale * ww.e11, hessian_scale * ww.e12, hessian_scale * ww.e12, hessian_scale * ww.e22, r0,
                r1, floor);
}

auto lagrangian_fn(const ModelParams& params, const Potential& pot, TwoBodyForm form) {
  return [&params, &pot, form](const HyperDual& X, const HyperDual& x, const HyperDual& vX, const HyperDual& vx) {
    return form == TwoBodyForm::Multiplicative ? L2_mult(params, pot, X, x, vX, vx)
                                               : L2_additive(params, pot, X, x, vX, vx);
  };
}

auto hamiltonian_fn(const ModelParams& params, const Potential& pot, TwoBodyExponent exponent, TwoBodyForm form) {
  return [&params, &pot, exponent, form](const HyperDual& X, const HyperDual& x, const HyperDual& P,
                                         const HyperDual& p) {
    return form == TwoBodyForm::Multiplicative ? H2_mult(params, pot, X, x, P, p, exponent)
                                               : H2_additive(params, pot, X, x, P, p);
  };
}

}  // namespace

TwoBodyAcceleration twobody_acceleration(const ModelParams& params, const Potential& pot, double X, double x,
                                         double vX, double vx, TwoBodyForm form) {
  auto f = lagrangian_fn(params, pot, form);
  const double m = params.mass;
  const Solved s = second_order_solve(f, Vars{X, x, vX, vx}, {vX, vx}, 1.0, kHessianFloor * m * m, 1.0);
  return {s.first, s.second};
}

TwoBodyRate twobody_hamilton_rhs(const ModelParams& params, const Potential& pot, double X, double x, double P,
                                 double p, TwoBodyExponent exponent, TwoBodyForm form) {
  auto f = hamiltonian_fn(params, pot, exponent, form);
  const double m = params.mass;
  auto solve_at = [&](double P_, double p_) {
    return second_order_solve(f, Vars{X, x, P_, p_}, {P_, p_}, m, kHessianFloor, -1.0);
  };
  try {
    const Solved s = solve_at(P, p);
    return {P / m, p / m, s.first, s.second};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateHessian) throw;
  }
  // Zeros of the diagonal momentum Hessian at |P| or |p| = m lambda cancel
  // against the right-hand side, as in the one-particle kinematic flow.
  const double dP = kRemovableStep * std::max(1.0, std::fabs(P));
  const double dp = kRemovableStep * std::max(1.0, std::fabs(p));
  const Solved lo = solve_at(P - dP, p - dp);
  const Solved hi = solve_at(P + dP, p + dp);
  auto agree = [](double a, double b) { return std::fabs(a - b) <= 1e-6 * std::max(1.0, std::fabs(a) + std::fabs(b)); };
  if (!agree(lo.first, hi.first) || !agree(lo.second, hi.second)) {
    fail(ErrorCode::DegenerateHessian, "two-body momentum Hessian is singular");
  }
  return {P / m, p / m, 0.5 * (lo.first + hi.first), 0.5 * (lo.second + hi.second)};
}

TwoBodyEomReport twobody_eom_check(const ModelParams& params, const Potential& pot, const TwoBodyGrid& grid) {
  params.validate();
  GridSpec spec{grid.x_min, grid.x_max, grid.v_min, grid.v_max, grid.n};
  spec.validate();
  TwoBodyEomReport report;
  report.center_of_mass.grid_size = grid.n * grid.n * grid.n;
  report.relative.grid_size = report.center_of_mass.grid_size;
  auto track = [](EomReport& r, double residual, double x, double v) {
    if (!std::isnan(r.max_abs_residual) && (std::isnan(residual) || residual > r.max_abs_residual)) {
      r.max_abs_residual = residual;
      r.worst_x = x;
      r.worst_v = v;
    }
  };
  for (int i = 0; i < grid.n; ++i) {
    const double x = spec.x_at(i);
    const double reference = -2.0 / params.mass * pot.derivative(x);
    for (int k = 0; k < grid.n; ++k) {
      const double vx = spec.v_at(k);
      for (int l = 0; l < grid.n; ++l) {
        const double vX = spec.v_at(l);
        TwoBodyAcceleration a;
        try {
          a = twobody_acceleration(params, pot, 0.0, x, vX, vx);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateHessian) throw;
          ++report.center_of_mass.degenerate_points_skipped;
          ++report.relative.degenerate_points_skipped;
          continue;
        }
        track(report.center_of_mass, std::fabs(a.aX), x, vx);
        track(report.relative, std::fabs(a.ax - reference), x, vx);
      }
    }
  }
  return report;
}

namespace {

using State4 = OdeState<4>;

template <class Rhs, class Record>
TwoBodyTrajectory run4(Rhs& rhs, State4 y, const IntegrationOptions& options, Record& record) {
  TwoBodyTrajectory traj;
  traj.step = options.dt;
  traj.samples.push_back(record(0.0, y));
  for (int i = 1; i <= options.n_steps; ++i) {
    const double t0 = (i - 1) * options.dt;
    try {
      y = options.method == Method::RK4 ? rk4_step(rhs, t0, y, options.dt)
                                        : dopri_advance(rhs, t0, y, options.dt, options.rk45_tol);
      for (double c : y) {
        if (!std::isfinite(c)) fail(ErrorCode::DomainError, "state became non-finite");
      }
      if (i % options.stride == 0) traj.samples.push_back(record(i * options.dt, y));
    } catch (const Error& e) {
      traj.aborted = true;
      traj.abort_code = e.code();
      traj.abort_message = e.what();
      break;
    }
  }
  return traj;
}

}  // namespace

TwoBodyTrajectory integrate_twobody_lagrangian(const ModelParams& params, const Potential& pot, double X0,
                                               double x0, double vX0, double vx0, const IntegrationOptions& options) {
  params.validate();
  options.validate();
  auto rhs = [&](double, const State4& y) {
    const TwoBodyAcceleration a = twobody_acceleration(params, pot, y[0], y[1], y[2], y[3]);
    return State4{y[2], y[3], a.aX, a.ax};
  };
  auto f = lagrangian_fn(params, pot, TwoBodyForm::Multiplicative);
  auto record = [&](double t, const State4& y) {
    const HyperDual d = seeded(f, Vars{y[0], y[1], y[2], y[3]}, 2, 3);
    const double energy = y[2] * d.e1 + y[3] * d.e2 - d.re;
    return TwoBodySample{t, y[0], y[1], y[2], y[3], d.e1, d.e2, energy};
  };
  rhs(0.0, State4{X0, x0, vX0, vx0});
  return run4(rhs, State4{X0, x0, vX0, vx0}, options, record);
}

TwoBodyTrajectory integrate_twobody_hamiltonian(const ModelParams& params, const Potential& pot, double X0,
                                                double x0, double P0, double p0, const IntegrationOptions& options,
                                                TwoBodyExponent exponent) {
  params.validate();
  options.validate();
  auto rhs = [&](double, const State4& y) {
    const TwoBodyRate r = twobody_hamilton_rhs(params, pot, y[0], y[1], y[2], y[3], exponent);
    return State4{r.dX, r.dx, r.dP, r.dp};
  };
  const double m = params.mass;
  auto record = [&](double t, const State4& y) {
    return TwoBodySample{t, y[0], y[1], y[2] / m, y[3] / m, y[2], y[3], H2_mult(params, pot, y[0], y[1], y[2], y[3], exponent)};
  };
  rhs(0.0, State4{X0, x0, P0, p0});
  return run4(rhs, State4{X0, x0, P0, p0}, options, record);
}

TwoBodyTrajectory integrate_twobody_reference(const ModelParams& params, const Potential& pot, double X0,
                                              double x0, double vX0, double vx0, const IntegrationOptions& options) {
  params.validate();
  options.validate();
  const double m = params.mass;
  auto rhs = [&](double, const State4& y) {
    return State4{y[2], y[3], 0.0, -2.0 / m * pot.derivative(y[1])};
  };
  auto record = [&](double t, const State4& y) {
    return TwoBodySample{t, y[0], y[1], y[2], y[3], m * y[2], m * y[3],
                         H2_additive(params, pot, y[0], y[1], m * y[2], m * y[3])};
  };
  rhs(0.0, State4{X0, x0, vX0, vx0});
  return run4(rhs, State4{X0, x0, vX0, vx0}, options, record);
}

}  // namespace multlag
