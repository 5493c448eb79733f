#include "multlag/velocity_integrals.hpp"

#include <numbers>
#include <string>

#include "multlag/special_functions.hpp"

namespace multlag {

void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorCode::NonPositiveLambda, "lambda must be positive and finite, got " + std::to_string(lambda));
  }
}

void require_subluminal(double v, double c) {
  if (!(c > 0.0)) fail(ErrorCode::InvalidArgument, "speed of light must be positive");
  if (!std::isfinite(v) || std::fabs(v) > kSpeedLimitFraction * c) {
    fail(ErrorCode::SpeedLimitExceeded, "|v| = " + std::to_string(std::fabs(v)) + " exceeds the speed limit");
  }
}

double gamma_minus_one(double v, double c) {
  require_subluminal(v, c);
  const double beta2 = (v / c) * (v / c);
  const double root = std::sqrt(1.0 - beta2);
  // 1/root - 1 = beta2 / (root (1 + root))
  return beta2 / (root * (1.0 + root));
}

double momentum_gamma(double p, double mass, double c) {
  const double q = p / (mass * c);
  return std::sqrt(1.0 + q * q);
}

double momentum_gamma_minus_one(double p, double mass, double c) {
  const double q = p / (mass * c);
  return q * q / (std::sqrt(1.0 + q * q) + 1.0);
}

double gauss_velocity_integral(double v, double lambda) {
  require_positive_lambda(lambda);
  if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "velocity must be finite");
  return lambda * std::sqrt(std::numbers::pi / 2.0) * erf(v / (std::numbers::sqrt2 * lambda));
}

namespace {

// With w = gamma_u u one has dw = gamma_u^3 du and gamma_u = sqrt(1 + w^2/c^2),
// so both relativistic integrals become smooth integrals over [0, gamma_v v].
double substituted_upper_limit(double v, double c) {
  return std::fabs(v) * lorentz_gamma(std::fabs(v), c);
}

}  // namespace

double rel_velocity_integral(double v, double c, double lambda, const QuadratureSpec& spec) {
  require_positive_lambda(lambda);
  require_subluminal(v, c);
  const double k = (c * c) / (lambda * lambda);
  auto integrand = [c, k](double w) { return std::exp(-k * std::sqrt(1.0 + (w / c) * (w / c))); };
  const double value = integrate_adaptive(integrand, 0.0, substituted_upper_limit(v, c), spec).value;
  return v < 0.0 ? -value : value;
}

double rel_velocity_integral_rest_scaled(double v, double c, double lambda, const QuadratureSpec& spec) {
  require_positive_lambda(lambda);
  require_subluminal(v, c);
  const double inv_l2 = 1.0 / (lambda * lambda);
  // (c^2/lambda^2)(sqrt(1 + w^2/c^2) - 1) = (w^2/lambda^2) / (sqrt(1 + w^2/c^2) + 1)
  auto integrand = [c, inv_l2](double w) {
    return std::exp(-w * w * inv_l2 / (std::sqrt(1.0 + (w / c) * (w / c)) + 1.0));
  };
  const double value = integrate_adaptive(integrand, 0.0, substituted_upper_limit(v, c), spec).value;
  return v < 0.0 ? -value : value;
}

double gamma_power_integral(double v, double c, int k, const QuadratureSpec& spec) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "gamma power must be >= 1");
  require_subluminal(v, c);
  auto integrand = [c, k](double u) { return ipow(1.0 / std::sqrt(1.0 - (u / c) * (u / c)), k); };
  const double value = integrate_adaptive(integrand, 0.0, std::fabs(v), spec).value;
  return v < 0.0 ? -value : value;
}

HyperDual rel_velocity_integral(const HyperDual& v, double c, double lambda) {
  const double g = lorentz_gamma(v.re, c);
  const double dg = g * g * g * v.re / (c * c);
  const double k = (c * c) / (lambda * lambda);
  const double f1 = g * g * g * std::exp(-g * k);
  const double f2 = f1 * (3.0 / g - k) * dg;
  return lift(v, rel_velocity_integral(v.re, c, lambda), f1, f2);
}

HyperDual rel_velocity_integral_rest_scaled(const HyperDual& v, double c, double lambda) {
  const double g = lorentz_gamma(v.re, c);
  const double dg = g * g * g * v.re / (c * c);
  const double k = (c * c) / (lambda * lambda);
  const double f1 = g * g * g * std::exp(-gamma_minus_one(v.re, c) * k);
  const double f2 = f1 * (3.0 / g - k) * dg;
  return lift(v, rel_velocity_integral_rest_scaled(v.re, c, lambda), f1, f2);
}

HyperDual gamma_power_integral(const HyperDual& v, double c, int k) {
  const double g = lorentz_gamma(v.re, c);
  const double f1 = ipow(g, k);
  const double f2 = k * ipow(g, k + 2) * v.re / (c * c);
  return lift(v, gamma_power_integral(v.re, c, k), f1, f2);
}

}  // namespace multlag
