#pragma once

#include <cmath>

#include "multlag/lagrangians.hpp"

namespace multlag {

template <Scalar T>
T H_additive_nr(const ModelParams& params, const Potential& pot, const T& x, const T& p) {
  return p * p / (2.0 * params.mass) + pot.value(x);
}

template <Scalar T>
T H_mult_nr(const ModelParams& params, const Potential& pot, const T& x, const T& p) {
  using std::exp;
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return -ml2 * exp(-H_additive_nr(params, pot, x, p) / ml2);
}

template <Scalar T>
T H_hier_nr(const ModelParams& params, const Potential& pot, int j, const T& x, const T& p) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "hierarchy order must be non-negative");
  return ipow(H_additive_nr(params, pot, x, p), j);
}

template <Scalar T>
T H_additive_rel(const ModelParams& params, const Potential& pot, const T& x, const T& p) {
  using std::sqrt;
  const double mc = params.mass * params.c;
  return mc * params.c * sqrt(1.0 + (p / mc) * (p / mc)) + pot.value(x);
}

template <Scalar T>
T H_mult_rel(const ModelParams& params, const Potential& pot, const T& x, const T& p) {
  using std::exp;
  require_positive_lambda(params.lambda);
  const double ml2 = params.mass * params.lambda * params.lambda;
  return -ml2 * exp(-H_additive_rel(params, pot, x, p) / ml2);
}

template <Scalar T>
T H_hier_rel(const ModelParams& params, const Potential& pot, int j, const T& x, const T& p) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "hierarchy order must be non-negative");
  return ipow(H_additive_rel(params, pot, x, p), j);
}

template <Scalar T>
T hamiltonian(const Model& model, const T& x, const T& p) {
  const ModelParams& q = model.params;
  switch (model.family) {
    case Family::AdditiveNR: return H_additive_nr(q, model.potential, x, p);
    case Family::MultiplicativeNR: return H_mult_nr(q, model.potential, x, p);
    case Family::HierarchyNR: return H_hier_nr(q, model.potential, model.order, x, p);
    case Family::AdditiveRel: return H_additive_rel(q, model.potential, x, p);
    case Family::MultiplicativeRel: return H_mult_rel(q, model.potential, x, p);
    case Family::HierarchyRel: return H_hier_rel(q, model.potential, model.order, x, p);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

/// The additive Hamiltonian of the same kinematics (H_N or H_c).
double standard_hamiltonian(const Model& model, double x, double p);

/// H and its partials at (x, p); fx = dH/dx, fv = dH/dp and so on.
SecondDerivs hamiltonian_derivs(const Model& model, double x, double p);

/// m v, or gamma m v for the relativistic families.
double kinetic_momentum(const Model& model, double v);

/// Inverse of kinetic_momentum.
double kinetic_velocity(const Model& model, double p);

/// dL/dv from the jet engine.
double canonical_momentum(const Model& model, double x, double v);

/// v dL/dv - L.
double legendre_numeric(const Model& model, double x, double v);

// Counterparts of the shifted Lagrangians.

/// H_mult_nr + m lambda^2.
double H_mult_nr_shifted(const ModelParams& params, const Potential& pot, double x, double p);
/// H_mult_rel + m lambda^2.
double H_mult_rel_shifted(const ModelParams& params, const Potential& pot, double x, double p);
/// H_mult_rel * exp(c^2 / lambda^2).
double H_mult_rel_rest_scaled(const ModelParams& params, const Potential& pot, double x, double p);

struct LaxResult {
  double trace = 0.0;
  double expected = 0.0;
  double odd_trace = 0.0;
};

/// Traces of powers of the unit-mass oscillator Lax matrix [[p, w x], [w x, -p]]:
/// Tr(M^(2l)), 2 (p^2 + w^2 x^2)^l and Tr(M^(2l+1)).
LaxResult lax_invariant_check(double omega, double x, double p, int l);

}  // namespace multlag
