#pragma once

#include <cmath>

#include "multlag/hyperdual.hpp"
#include "multlag/quadrature.hpp"

namespace multlag {

/// Largest admissible |v|/c; beyond this gamma is treated as overflowing.
inline constexpr double kSpeedLimitFraction = 1.0 - 1e-12;

void require_positive_lambda(double lambda);
void require_subluminal(double v, double c);

/// Lorentz factor 1/sqrt(1 - v^2/c^2).
template <Scalar T>
T lorentz_gamma(const T& v, double c) {
  using std::sqrt;
  require_subluminal(value_of(v), c);
  return 1.0 / sqrt(1.0 - v * v / (c * c));
}

/// gamma - 1 without cancellation at small v/c.
double gamma_minus_one(double v, double c);

/// sqrt(1 + (p/(m c))^2), the Lorentz factor written in momentum.
double momentum_gamma(double p, double mass, double c);

/// sqrt(1 + (p/(m c))^2) - 1 without cancellation.
double momentum_gamma_minus_one(double p, double mass, double c);

/// Integral of exp(-u^2 / (2 lambda^2)) over [0, v], via erf.
double gauss_velocity_integral(double v, double lambda);

/// Integral of gamma_u^3 exp(-gamma_u c^2 / lambda^2) over [0, v].
double rel_velocity_integral(double v, double c, double lambda, const QuadratureSpec& spec = {});

/// rel_velocity_integral(v, c, lambda) * exp(c^2 / lambda^2), finite for any c.
double rel_velocity_integral_rest_scaled(double v, double c, double lambda,
                                         const QuadratureSpec& spec = {});

/// Integral of gamma_u^k over [0, v].
double gamma_power_integral(double v, double c, int k, const QuadratureSpec& spec = {});

// HyperDual overloads differentiate the integrals through their integrands
// (fundamental theorem of calculus) instead of through the quadrature.

inline HyperDual gauss_velocity_integral(const HyperDual& v, double lambda) {
  const double g = std::exp(-v.re * v.re / (2.0 * lambda * lambda));
  return lift(v, gauss_velocity_integral(v.re, lambda), g, -v.re / (lambda * lambda) * g);
}

HyperDual rel_velocity_integral(const HyperDual& v, double c, double lambda);
HyperDual rel_velocity_integral_rest_scaled(const HyperDual& v, double c, double lambda);
HyperDual gamma_power_integral(const HyperDual& v, double c, int k);

}  // namespace multlag
