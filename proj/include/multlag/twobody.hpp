#pragma once

#include <string>
#include <vector>

#include "multlag/dynamics.hpp"

namespace multlag {

// Two identical particles of mass m in one dimension, described by
// X = x1 + x2 and x = x1 - x2, with P = p1 + p2 = m Xdot, p = p1 - p2 = m xdot.

/// Exponent of the potential factor multiplying k(p) in H2_mult.
/// Mirrored: exp(-2V/(m lambda^2)), matching g(x) of the Lagrangian.
/// AsPrinted: exp(-V/(m lambda^2)).
enum class TwoBodyExponent { Mirrored, AsPrinted };

/// exp(-u^2 / (2 lambda^2)) + (u / lambda^2) * integral of exp(-s^2 / (2 lambda^2)) over [0, u].
template <Scalar T>
T twobody_f(const T& u, double lambda) {
  using std::exp;
  const double l2 = lambda * lambda;
  return exp(-u * u / (2.0 * l2)) + u / l2 * gauss_velocity_integral(u, lambda);
}

/// (m lambda^2 / 2) (f(Xdot) + f(xdot) g(x)), g = exp(-2V/(m lambda^2)). X is not used.
template <Scalar T>
T L2_mult(const ModelParams& params, const Potential& pot, const T& X, const T& x, const T& vX, const T& vx) {
  using std::exp;
  (void)X;
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return 0.5 * ml2 * (twobody_f(vX, params.lambda) + twobody_f(vx, params.lambda) * exp(-2.0 * pot.value(x) / ml2));
}

/// (m/4)(Xdot^2 + xdot^2) - V(x).
template <Scalar T>
T L2_additive(const ModelParams& params, const Potential& pot, const T& X, const T& x, const T& vX, const T& vx) {
  (void)X;
  return 0.25 * params.mass * (vX * vX + vx * vx) - pot.value(x);
}

/// -(m lambda^2 / 2) (k(P) + k(p) b(x)), k(q) = exp(-q^2 / (2 m^2 lambda^2)).
template <Scalar T>
T H2_mult(const ModelParams& params, const Potential& pot, const T& X, const T& x, const T& P, const T& p,
          TwoBodyExponent exponent = TwoBodyExponent::Mirrored) {
  using std::exp;
  (void)X;
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double mm2l2 = 2.0 * params.mass * ml2;
  const double weight = exponent == TwoBodyExponent::Mirrored ? 2.0 : 1.0;
  return -0.5 * ml2 * (exp(-P * P / mm2l2) + exp(-p * p / mm2l2) * exp(-weight * pot.value(x) / ml2));
}

/// (P^2 + p^2)/(4m) + V(x).
template <Scalar T>
T H2_additive(const ModelParams& params, const Potential& pot, const T& X, const T& x, const T& P, const T& p) {
  (void)X;
  return (P * P + p * p) / (4.0 * params.mass) + pot.value(x);
}

/// L2_mult - m lambda^2 without cancellation.
double L2_mult_shifted(const ModelParams& params, const Potential& pot, double x, double vX, double vx);

/// H2_mult + m lambda^2 without cancellation.
double H2_mult_shifted(const ModelParams& params, const Potential& pot, double x, double P, double p,
                       TwoBodyExponent exponent = TwoBodyExponent::Mirrored);

enum class TwoBodyForm { Multiplicative, Additive };

struct TwoBodyAcceleration {
  double aX = 0.0;
  double ax = 0.0;
};

/// Solves the 2x2 Euler-Lagrange system of L2 for (Xddot, xddot).
TwoBodyAcceleration twobody_acceleration(const ModelParams& params, const Potential& pot, double X, double x,
                                         double vX, double vx, TwoBodyForm form = TwoBodyForm::Multiplicative);

struct TwoBodyRate {
  double dX = 0.0;
  double dx = 0.0;
  double dP = 0.0;
  double dp = 0.0;
};

/// Hamilton-side flow: Xdot = P/m, xdot = p/m and m H_qq' qdot' = -H_q - H_pq p
/// solved for (Pdot, pdot) with the momentum Hessian of H2. At a removable
/// zero of that Hessian the two-sided limit is used, as in momentum_rate_kinematic.
TwoBodyRate twobody_hamilton_rhs(const ModelParams& params, const Potential& pot, double X, double x, double P,
                                 double p, TwoBodyExponent exponent = TwoBodyExponent::Mirrored,
                                 TwoBodyForm form = TwoBodyForm::Multiplicative);

struct TwoBodyGrid {
  double x_min = 0.5;
  double x_max = 1.5;
  double v_min = -1.0;
  double v_max = 1.0;
  int n = 11;
};

struct TwoBodyEomReport {
  EomReport center_of_mass;
  EomReport relative;
};

/// Scans (x, xdot, Xdot) on an n^3 grid; the center-of-mass residual is |Xddot|,
/// the relative one |xddot + (2/m) V'(x)|. worst_v holds xdot.
TwoBodyEomReport twobody_eom_check(const ModelParams& params, const Potential& pot, const TwoBodyGrid& grid);

struct TwoBodySample {
  double t = 0.0;
  double X = 0.0;
  double x = 0.0;
  double vX = 0.0;
  double vx = 0.0;
  double P = 0.0;
  double p = 0.0;
  double h_model = 0.0;
};

struct TwoBodyTrajectory {
  double step = 0.0;
  std::vector<TwoBodySample> samples;
  bool aborted = false;
  ErrorCode abort_code = ErrorCode::InvalidArgument;
  std::string abort_message;
};

/// Integrates the Euler-Lagrange system of L2_mult; h_model is its Legendre transform.
TwoBodyTrajectory integrate_twobody_lagrangian(const ModelParams& params, const Potential& pot, double X0,
                                               double x0, double vX0, double vx0, const IntegrationOptions& options);

/// Integrates twobody_hamilton_rhs; h_model is H2_mult.
TwoBodyTrajectory integrate_twobody_hamiltonian(const ModelParams& params, const Potential& pot, double X0,
                                                double x0, double P0, double p0, const IntegrationOptions& options,
                                                TwoBodyExponent exponent = TwoBodyExponent::Mirrored);

/// Direct integration of Xddot = 0, xddot = -(2/m) V'(x).
TwoBodyTrajectory integrate_twobody_reference(const ModelParams& params, const Potential& pot, double X0,
                                              double x0, double vX0, double vx0, const IntegrationOptions& options);

}  // namespace multlag
