#pragma once

#include <cmath>

#include "multlag/autodiff.hpp"
#include "multlag/model.hpp"
#include "multlag/velocity_integrals.hpp"

namespace multlag {

/// Binomial coefficient as a double; exact while it fits in 53 bits.
double binomial(int n, int k);

/// Coefficient of T^(j-k) V^k in the j-th hierarchy Lagrangian,
/// j! / ((j-k)! k! (2j - 2k - 1)). The denominator is odd, never zero.
double hierarchy_coefficient(int j, int k);

template <Scalar T>
T L_additive_nr(const ModelParams& params, const Potential& pot, const T& x, const T& v) {
  return 0.5 * params.mass * v * v - pot.value(x);
}

template <Scalar T>
T L_mult_nr(const ModelParams& params, const Potential& pot, const T& x, const T& v) {
  using std::exp;
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  const T kinetic = exp(-v * v / (2.0 * l2)) + v / l2 * gauss_velocity_integral(v, params.lambda);
  return ml2 * kinetic * exp(-pot.value(x) / ml2);
}

/// Canonical momentum dL/dv of the multiplicative Lagrangian.
template <Scalar T>
T momentum_mult_nr(const ModelParams& params, const Potential& pot, const T& x, const T& v) {
  using std::exp;
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return params.mass * gauss_velocity_integral(v, params.lambda) * exp(-pot.value(x) / ml2);
}

/// Hierarchy member as a polynomial in T and V.
template <Scalar T>
T hierarchy_polynomial_nr(int j, const T& kinetic, const T& potential) {
  T sum(0.0);
  for (int k = 0; k <= j; ++k) {
    sum += hierarchy_coefficient(j, k) * ipow(kinetic, j - k) * ipow(potential, k);
  }
  return sum;
}

template <Scalar T>
T L_hier_nr(const ModelParams& params, const Potential& pot, int j, const T& x, const T& v) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "hierarchy order must be non-negative");
  return hierarchy_polynomial_nr(j, T(0.5 * params.mass * v * v), pot.value(x));
}

template <Scalar T>
T L_additive_rel(const ModelParams& params, const Potential& pot, const T& x, const T& v) {
  using std::sqrt;
  require_subluminal(value_of(v), params.c);
  const double c2 = params.c * params.c;
  return -params.mass * c2 * sqrt(1.0 - v * v / c2) - pot.value(x);
}

template <Scalar T>
T L_mult_rel(const ModelParams& params, const Potential& pot, const T& x, const T& v) {
  using std::exp;
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  const double c2 = params.c * params.c;
  const T gamma = lorentz_gamma(v, params.c);
  const T kinetic = exp(-gamma * c2 / l2) + v / l2 * rel_velocity_integral(v, params.c, params.lambda);
  return ml2 * kinetic * exp(-pot.value(x) / ml2);
}

/// gamma^j - (j v / c^2) * integral of gamma^(j+2) over [0, v], with P_0 = 1.
template <Scalar T>
T P_j(const T& v, double c, int j) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "P_j needs j >= 0");
  require_subluminal(value_of(v), c);
  if (j == 0) return T(1.0);
  const T gamma = lorentz_gamma(v, c);
  return ipow(gamma, j) - (j / (c * c)) * v * gamma_power_integral(v, c, j + 2);
}

/// The closed forms printed for P_2 and P_4, kept for comparison with P_j.
double P2_printed(double v, double c);
double P4_printed(double v, double c);

/// Closed form of P_2 obtained from the defining integral: 1 - beta artanh(beta).
double P2_closed(double v, double c);

/// Relativistic hierarchy member as a function of v and a formal potential value.
template <Scalar T>
T hierarchy_polynomial_rel(const ModelParams& params, int j, const T& v, const T& potential) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "hierarchy order must be non-negative");
  const double rest = params.mass * params.c * params.c;
  T sum(0.0);
  for (int k = 0; k <= j; ++k) {
    sum += binomial(j, k) * ipow(rest, j - k) * P_j(v, params.c, j - k) * ipow(potential, k);
  }
  return -sum;
}

template <Scalar T>
T L_hier_rel(const ModelParams& params, const Potential& pot, int j, const T& x, const T& v) {
  return hierarchy_polynomial_rel(params, j, v, pot.value(x));
}

/// Dispatches on the family of the model.
template <Scalar T>
T lagrangian(const Model& model, const T& x, const T& v) {
  const ModelParams& p = model.params;
  switch (model.family) {
    case Family::AdditiveNR: return L_additive_nr(p, model.potential, x, v);
    case Family::MultiplicativeNR: return L_mult_nr(p, model.potential, x, v);
    case Family::HierarchyNR: return L_hier_nr(p, model.potential, model.order, x, v);
    case Family::AdditiveRel: return L_additive_rel(p, model.potential, x, v);
    case Family::MultiplicativeRel: return L_mult_rel(p, model.potential, x, v);
    case Family::HierarchyRel: return L_hier_rel(p, model.potential, model.order, x, v);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

/// L and its partials at (x, v) from one jet evaluation.
SecondDerivs lagrangian_derivs(const Model& model, double x, double v);

// Forms that stay accurate where the multiplicative Lagrangians approach
// their constant m lambda^2 or underflow.

/// L_mult_nr - m lambda^2.
double L_mult_nr_shifted(const ModelParams& params, const Potential& pot, double x, double v);
/// L_mult_rel - m lambda^2.
double L_mult_rel_shifted(const ModelParams& params, const Potential& pot, double x, double v);
/// L_mult_rel * exp(c^2 / lambda^2).
double L_mult_rel_rest_scaled(const ModelParams& params, const Potential& pot, double x, double v);

}  // namespace multlag
