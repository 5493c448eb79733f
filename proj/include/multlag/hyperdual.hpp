#pragma once

#include <cmath>
#include <concepts>
#include <numbers>

#include "multlag/error.hpp"

namespace multlag {

/**
 * Second-order truncated Taylor jet in two independent variables u and w.
 *
 * Carries f, df/du, df/dw, d2f/du2, d2f/dw2 and d2f/dudw through arithmetic
 * and elementary functions with no truncation error. Seed u with
 * HyperDual::first(u) and w with HyperDual::second(w); after evaluating f the
 * fields hold the partials at (u, w).
 */
struct HyperDual {
  double re = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e11 = 0.0;
  double e22 = 0.0;
  double e12 = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double value) : re(value) {}  // NOLINT: implicit by design of the jet algebra
  constexpr HyperDual(double r, double d1, double d2, double d11, double d22, double d12)
      : re(r), e1(d1), e2(d2), e11(d11), e22(d22), e12(d12) {}

  static constexpr HyperDual first(double u) { return {u, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr HyperDual second(double w) { return {w, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  constexpr HyperDual operator-() const { return {-re, -e1, -e2, -e11, -e22, -e12}; }

  constexpr HyperDual& operator+=(const HyperDual& o) {
    re += o.re; e1 += o.e1; e2 += o.e2; e11 += o.e11; e22 += o.e22; e12 += o.e12;
    return *this;
  }
  constexpr HyperDual& operator-=(const HyperDual& o) {
    re -= o.re; e1 -= o.e1; e2 -= o.e2; e11 -= o.e11; e22 -= o.e22; e12 -= o.e12;
    return *this;
  }
  constexpr HyperDual& operator*=(const HyperDual& rhs) {
    const HyperDual a = *this;
    const HyperDual o = rhs;  // rhs may alias *this
    re = a.re * o.re;
    e1 = a.e1 * o.re + a.re * o.e1;
    e2 = a.e2 * o.re + a.re * o.e2;
    e11 = a.e11 * o.re + 2.0 * a.e1 * o.e1 + a.re * o.e11;
    e22 = a.e22 * o.re + 2.0 * a.e2 * o.e2 + a.re * o.e22;
    e12 = a.e12 * o.re + a.e1 * o.e2 + a.e2 * o.e1 + a.re * o.e12;
    return *this;
  }
  constexpr HyperDual& operator*=(double s) {
    re *= s; e1 *= s; e2 *= s; e11 *= s; e22 *= s; e12 *= s;
    return *this;
  }
  HyperDual& operator/=(const HyperDual& o);
  constexpr HyperDual& operator/=(double s) { return *this *= (1.0 / s); }
};

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, HyperDual>;

constexpr double value_of(double x) { return x; }
constexpr double value_of(const HyperDual& x) { return x.re; }

/// Applies a scalar function with known value f0 and derivatives f1, f2 at u.re.
constexpr HyperDual lift(const HyperDual& u, double f0, double f1, double f2) {
  return {f0,
          f1 * u.e1,
          f1 * u.e2,
          f2 * u.e1 * u.e1 + f1 * u.e11,
          f2 * u.e2 * u.e2 + f1 * u.e22,
          f2 * u.e1 * u.e2 + f1 * u.e12};
}

constexpr HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
constexpr HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
constexpr HyperDual operator*(HyperDual a, const HyperDual& b) { return a *= b; }
constexpr HyperDual operator+(HyperDual a, double b) { a.re += b; return a; }
constexpr HyperDual operator+(double a, HyperDual b) { b.re += a; return b; }
constexpr HyperDual operator-(HyperDual a, double b) { a.re -= b; return a; }
constexpr HyperDual operator-(double a, const HyperDual& b) { return -b + a; }
constexpr HyperDual operator*(HyperDual a, double b) { return a *= b; }
constexpr HyperDual operator*(double a, HyperDual b) { return b *= a; }

inline HyperDual reciprocal(const HyperDual& b) {
  if (b.re == 0.0) fail(ErrorCode::UnsupportedOperation, "division by zero in HyperDual");
  const double inv = 1.0 / b.re;
  return lift(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline HyperDual& HyperDual::operator/=(const HyperDual& o) { return *this *= reciprocal(o); }

inline HyperDual operator/(HyperDual a, const HyperDual& b) { return a /= b; }
inline HyperDual operator/(HyperDual a, double b) { return a /= b; }
inline HyperDual operator/(double a, const HyperDual& b) { return a * reciprocal(b); }

inline HyperDual exp(const HyperDual& u) {
  const double e = std::exp(u.re);
  return lift(u, e, e, e);
}

inline HyperDual log(const HyperDual& u) {
  if (u.re <= 0.0) fail(ErrorCode::UnsupportedOperation, "log of non-positive HyperDual");
  return lift(u, std::log(u.re), 1.0 / u.re, -1.0 / (u.re * u.re));
}

inline HyperDual sqrt(const HyperDual& u) {
  if (u.re <= 0.0) fail(ErrorCode::UnsupportedOperation, "sqrt is not differentiable at or below zero");
  const double s = std::sqrt(u.re);
  return lift(u, s, 0.5 / s, -0.25 / (s * u.re));
}

inline HyperDual pow(const HyperDual& u, double a) {
  if (u.re <= 0.0) {
    if (u.re == 0.0 && a >= 2.0 && a == std::floor(a)) {
      return lift(u, 0.0, 0.0, a == 2.0 ? 2.0 : 0.0);
    }
    fail(ErrorCode::UnsupportedOperation, "real power of non-positive HyperDual");
  }
  const double p = std::pow(u.re, a);
  return lift(u, p, a * p / u.re, a * (a - 1.0) * p / (u.re * u.re));
}

inline HyperDual pow(const HyperDual& u, int n) {
  if (n == 0) return HyperDual(1.0);
  if (n < 0) return reciprocal(pow(u, -n));
  HyperDual result(1.0);
  HyperDual base = u;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

inline HyperDual sin(const HyperDual& u) {
  const double s = std::sin(u.re);
  return lift(u, s, std::cos(u.re), -s);
}

inline HyperDual cos(const HyperDual& u) {
  const double c = std::cos(u.re);
  return lift(u, c, -std::sin(u.re), -c);
}

inline HyperDual abs(const HyperDual& u) {
  if (u.re == 0.0) fail(ErrorCode::UnsupportedOperation, "abs is not differentiable at zero");
  return u.re > 0.0 ? u : -u;
}

/// Integer power for plain doubles, matching pow(HyperDual, int).
inline double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double result = 1.0;
  while (n > 0) {
    if (n & 1) result *= x;
    n >>= 1;
    if (n > 0) x *= x;
  }
  return result;
}

inline HyperDual ipow(const HyperDual& x, int n) { return pow(x, n); }

}  // namespace multlag
