#pragma once

#include "multlag/hyperdual.hpp"

namespace multlag {

/// Error function from Cody's rational Chebyshev approximations
/// (split at |x| = 0.46875 and 4). Platform independent, |error| < 1e-15.
double erf(double x);

/// Complementary error function, same approximation family.
double erfc(double x);

inline HyperDual erf(const HyperDual& u) {
  constexpr double two_over_sqrt_pi = 1.1283791670955125739;
  const double d = two_over_sqrt_pi * std::exp(-u.re * u.re);
  return lift(u, erf(u.re), d, -2.0 * u.re * d);
}

}  // namespace multlag
