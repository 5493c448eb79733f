#pragma once

#include <concepts>

#include "multlag/hyperdual.hpp"

namespace multlag {

/// Value and the partials of f(x, v) needed by the Euler-Lagrange identity.
struct SecondDerivs {
  double f = 0.0;
  double fx = 0.0;
  double fv = 0.0;
  double fvv = 0.0;
  double fxv = 0.0;
  double fxx = 0.0;
};

/// Evaluates f(x, v) once on seeded jets; f must accept (HyperDual, HyperDual).
template <class F>
  requires std::invocable<F&, HyperDual, HyperDual>
SecondDerivs eval_with_second_derivs(F&& f, double x, double v) {
  const HyperDual r = f(HyperDual::first(x), HyperDual::second(v));
  return {r.re, r.e1, r.e2, r.e22, r.e12, r.e11};
}

}  // namespace multlag
