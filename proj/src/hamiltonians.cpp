#include "multlag/hamiltonians.hpp"

#include <array>

namespace multlag {

double standard_hamiltonian(const Model& model, double x, double p) {
  if (is_relativistic(model.family)) return H_additive_rel(model.params, model.potential, x, p);
  return H_additive_nr(model.params, model.potential, x, p);
}

SecondDerivs hamiltonian_derivs(const Model& model, double x, double p) {
  return eval_with_second_derivs(
      [&model](const HyperDual& xx, const HyperDual& pp) { return hamiltonian(model, xx, pp); }, x, p);
}

double kinetic_momentum(const Model& model, double v) {
  const double m = model.params.mass;
  if (is_relativistic(model.family)) return lorentz_gamma(v, model.params.c) * m * v;
  return m * v;
}

double kinetic_velocity(const Model& model, double p) {
  const double m = model.params.mass;
  if (is_relativistic(model.family)) return p / (m * momentum_gamma(p, m, model.params.c));
  return p / m;
}

double canonical_momentum(const Model& model, double x, double v) { return lagrangian_derivs(model, x, v).fv; }

double legendre_numeric(const Model& model, double x, double v) {
  const SecondDerivs d = lagrangian_derivs(model, x, v);
  return v * d.fv - d.f;
}

double H_mult_nr_shifted(const ModelParams& params, const Potential& pot, double x, double p) {
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return -ml2 * std::expm1(-H_additive_nr(params, pot, x, p) / ml2);
}

double H_mult_rel_shifted(const ModelParams& params, const Potential& pot, double x, double p) {
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return -ml2 * std::expm1(-H_additive_rel(params, pot, x, p) / ml2);
}

double H_mult_rel_rest_scaled(const ModelParams& params, const Potential& pot, double x, double p) {
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double mc2 = params.mass * params.c * params.c;
  const double excess = mc2 * momentum_gamma_minus_one(p, params.mass, params.c);
  return -ml2 * std::exp(-(excess + pot.value(x)) / ml2);
}

namespace {

using Mat2 = std::array<double, 4>;

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

LaxResult lax_invariant_check(double omega, double x, double p, int l) {
  if (l < 1) fail(ErrorCode::InvalidArgument, "Lax power l must be >= 1");
  const double wx = omega * x;
  const Mat2 lax{p, wx, wx, -p};
  Mat2 power{1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 2 * l; ++i) power = multiply(power, lax);
  const Mat2 odd = multiply(power, lax);
  LaxResult result;
  result.trace = power[0] + power[3];
  result.expected = 2.0 * ipow(p * p + wx * wx, l);
  result.odd_trace = odd[0] + odd[3];
  return result;
}

}  // namespace multlag
