#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "multlag/error.hpp"

namespace multlag {

template <std::size_t N>
using OdeState = std::array<double, N>;

template <std::size_t N>
OdeState<N> axpy(const OdeState<N>& y, double h, const OdeState<N>& k) {
  OdeState<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h * k[i];
  return out;
}

/// Classical fourth-order Runge-Kutta step; f(t, y) returns dy/dt.
template <std::size_t N, class F>
OdeState<N> rk4_step(F& f, double t, const OdeState<N>& y, double h) {
  const OdeState<N> k1 = f(t, y);
  const OdeState<N> k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const OdeState<N> k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const OdeState<N> k4 = f(t + h, axpy(y, h, k3));
  OdeState<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/**
 * Advances y from t to t + h with embedded Dormand-Prince 5(4) substeps.
 * The local error of each accepted substep satisfies
 * |err_i| <= tol * (1 + max(|y_i|, |y_new_i|)).
 */
template <std::size_t N, class F>
OdeState<N> dopri_advance(F& f, double t, const OdeState<N>& y0, double h, double tol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                          b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double t_end = t + h;
  OdeState<N> y = y0;
  double step = h;
  int substeps = 0;
  while (t < t_end) {
    if (++substeps > 1000000) fail(ErrorCode::InvalidArgument, "adaptive integrator exceeded its step budget");
    step = std::min(step, t_end - t);
    const OdeState<N> k1 = f(t, y);
    OdeState<N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + step * a21 * k1[i];
    const OdeState<N> k2 = f(t + c2 * step, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + step * (a31 * k1[i] + a32 * k2[i]);
    const OdeState<N> k3 = f(t + c3 * step, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + step * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const OdeState<N> k4 = f(t + c4 * step, tmp);
    for (std::size_t i = 0; i < N; ++i) {
      tmp[i] = y[i] + step * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    const OdeState<N> k5 = f(t + c5 * step, tmp);
    for (std::size_t i = 0; i < N; ++i) {
      tmp[i] = y[i] + step * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    }
    const OdeState<N> k6 = f(t + step, tmp);
    OdeState<N> next;
    for (std::size_t i = 0; i < N; ++i) {
      next[i] = y[i] + step * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    }
    const OdeState<N> k7 = f(t + step, next);
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e =
          step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = tol * (1.0 + std::max(std::fabs(y[i]), std::fabs(next[i])));
      err = std::max(err, std::fabs(e) / scale);
    }
    if (err <= 1.0) {
      const bool last = step >= t_end - t;
      t = last ? t_end : t + step;
      y = next;
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    step *= factor;
  }
  return y;
}

}  // namespace multlag
