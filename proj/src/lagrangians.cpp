#include "multlag/lagrangians.hpp"

#include <cmath>

namespace multlag {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return std::round(result);
}

double hierarchy_coefficient(int j, int k) { return binomial(j, k) / (2 * (j - k) - 1); }

double P2_printed(double v, double c) {
  const double gamma = lorentz_gamma(v, c);
  return 1.0 - (v / c) * std::log((v / c) * gamma * gamma);
}

double P4_printed(double v, double c) {
  const double beta = v / c;
  const double gamma = lorentz_gamma(v, c);
  const double g2 = gamma * gamma;
  return g2 * (1.0 - 1.5 * beta * beta) - 1.5 * beta * std::log(beta * g2);
}

double P2_closed(double v, double c) {
  const double beta = v / c;
  require_subluminal(v, c);
  return 1.0 - beta * std::atanh(beta);
}

SecondDerivs lagrangian_derivs(const Model& model, double x, double v) {
  return eval_with_second_derivs(
      [&model](const HyperDual& xx, const HyperDual& vv) { return lagrangian(model, xx, vv); }, x, v);
}

double L_mult_nr_shifted(const ModelParams& params, const Potential& pot, double x, double v) {
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  const double kinetic_m1 = std::expm1(-v * v / (2.0 * l2)) + v / l2 * gauss_velocity_integral(v, params.lambda);
  const double a = -pot.value(x) / ml2;
  return ml2 * (kinetic_m1 * std::exp(a) + std::expm1(a));
}

double L_mult_rel_shifted(const ModelParams& params, const Potential& pot, double x, double v) {
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  const double c2 = params.c * params.c;
  const double gamma = lorentz_gamma(v, params.c);
  const double kinetic_m1 =
      std::expm1(-gamma * c2 / l2) + v / l2 * rel_velocity_integral(v, params.c, params.lambda);
  const double a = -pot.value(x) / ml2;
  return ml2 * (kinetic_m1 * std::exp(a) + std::expm1(a));
}

double L_mult_rel_rest_scaled(const ModelParams& params, const Potential& pot, double x, double v) {
  require_positive_lambda(params.lambda);
  const double l2 = params.lambda * params.lambda;
  const double ml2 = params.mass * l2;
  const double gamma = lorentz_gamma(v, params.c);
  // (gamma - 1) c^2 = v^2 gamma^2 / (gamma + 1)
  const double excess = v * v * gamma * gamma / (gamma + 1.0);
  const double kinetic = std::exp(-excess / l2) +
                         v / l2 * rel_velocity_integral_rest_scaled(v, params.c, params.lambda);
  return ml2 * kinetic * std::exp(-pot.value(x) / ml2);
}

}  // namespace multlag
