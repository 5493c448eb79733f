#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>

#include "multlag/autodiff.hpp"
#include "multlag/error.hpp"
#include "multlag/ode.hpp"
#include "multlag/quadrature.hpp"
#include "multlag/special_functions.hpp"
#include "multlag/velocity_integrals.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace multlag;

namespace {

// sqrt(pi/2)
constexpr double kSqrtHalfPi = 1.2533141373155002512;

}  // namespace

TEST(Erf, MatchesLibmAcrossRanges) {
  for (double x = -7.0; x <= 7.0; x += 0.0137) {
    EXPECT_NEAR(multlag::erf(x), std::erf(x), 1e-15) << x;
    EXPECT_NEAR(multlag::erfc(x), std::erfc(x), 2e-15 * std::max(1.0, std::erfc(x))) << x;
  }
}

TEST(Erf, OddAndSaturates) {
  EXPECT_EQ(multlag::erf(0.0), 0.0);
  EXPECT_EQ(multlag::erf(-0.3), -multlag::erf(0.3));
  EXPECT_EQ(multlag::erf(40.0), 1.0);
  EXPECT_EQ(multlag::erfc(40.0), 0.0);
}

TEST(Quadrature, GaussLegendreIsExactForDegree29) {
  const GaussLegendreRule& rule = gauss_legendre_15();
  ASSERT_EQ(rule.nodes.size(), 15u);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  EXPECT_NEAR(wsum, 2.0, 1e-15);
  auto f = [](double x) { return std::pow(x, 28) + std::pow(x, 29); };
  EXPECT_NEAR(gauss_legendre_panel(f, -1.0, 1.0, rule), 2.0 / 29.0, 1e-15);
}

TEST(Quadrature, AdaptiveHandlesEndpointSingularity) {
  auto f = [](double x) { return std::sqrt(x); };
  QuadratureSpec spec;
  spec.max_subdivisions = 200;
  const QuadratureResult r = integrate_adaptive(f, 0.0, 1.0, spec);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-12);
}

TEST(Quadrature, EmptyIntervalAndReversedBounds) {
  auto f = [](double x) { return std::exp(x); };
  EXPECT_EQ(integrate_adaptive(f, 0.4, 0.4).value, 0.0);
  EXPECT_NEAR(integrate_adaptive(f, 1.0, 0.0).value, -(std::exp(1.0) - 1.0), 1e-14);
}

TEST(Quadrature, RejectsBadSpec) {
  QuadratureSpec spec;
  spec.abs_tol = 0.0;
  expect_error([&] { integrate_adaptive([](double x) { return x; }, 0.0, 1.0, spec); },
               ErrorCode::InvalidArgument);
}

TEST(GaussVelocityIntegral, Examples) {
  EXPECT_EQ(gauss_velocity_integral(0.0, 1.0), 0.0);
  const double oracle =
      oracle::simpson([](double u) { return std::exp(-0.5 * u * u); }, 0.0, 1.0, 1e-15);
  EXPECT_NEAR(gauss_velocity_integral(1.0, 1.0), oracle, 1e-12);
  EXPECT_NEAR(gauss_velocity_integral(1.0, 1.0), 0.8556243918, 1e-10);
  // mpmath, 40 digits
  EXPECT_NEAR(gauss_velocity_integral(1.0, 1.0), 0.85562439189214880, 2e-16);
  EXPECT_EQ(gauss_velocity_integral(-1.0, 1.0), -gauss_velocity_integral(1.0, 1.0));
}

TEST(GaussVelocityIntegral, SaturatesAtLargeVelocity) {
  for (double lambda : {0.5, 1.0, 3.0, 10.0}) {
    EXPECT_NEAR(gauss_velocity_integral(12.0 * lambda, lambda), lambda * kSqrtHalfPi, 1e-12 * lambda);
  }
}

TEST(GaussVelocityIntegral, RejectsNonPositiveLambda) {
  expect_error([] { gauss_velocity_integral(1.0, 0.0); }, ErrorCode::NonPositiveLambda);
  expect_error([] { gauss_velocity_integral(1.0, -2.0); }, ErrorCode::NonPositiveLambda);
}

TEST(RelVelocityIntegral, Examples) {
  EXPECT_EQ(rel_velocity_integral(0.0, 1.0, 1.0), 0.0);
  auto raw = [](double u) {
    const double g = oracle::gamma(u, 1.0);
    return g * g * g * std::exp(-g);
  };
  const double direct = oracle::simpson(raw, 0.0, 0.5, 1e-15);
  EXPECT_NEAR(rel_velocity_integral(0.5, 1.0, 1.0), direct, 1e-10 * direct);
  // mpmath, 40 digits
  EXPECT_NEAR(rel_velocity_integral(0.5, 1.0, 1.0), 0.20163517667833969, 1e-15);
  EXPECT_EQ(rel_velocity_integral(-0.5, 1.0, 1.0), -rel_velocity_integral(0.5, 1.0, 1.0));
}

TEST(RelVelocityIntegral, AgreesWithRawIntegrandAtRandomPoints) {
  oracle::Uniform rng(7);
  for (int i = 0; i < 50; ++i) {
    const double c = rng(0.5, 3.0);
    const double lambda = c * rng(0.5, 3.0);
    const double v = c * rng(-0.95, 0.95);
    const double k = c * c / (lambda * lambda);
    auto raw = [&](double u) {
      const double g = oracle::gamma(u, c);
      return g * g * g * std::exp(-g * k);
    };
    const double direct = oracle::simpson(raw, 0.0, v, 1e-15 * std::exp(-k) * c);
    EXPECT_NEAR(rel_velocity_integral(v, c, lambda), direct, 1e-10 * std::fabs(direct)) << v << " " << c;
  }
}

TEST(RelVelocityIntegral, RestScaledMatchesProduct) {
  for (double v : {-0.7, 0.1, 0.5, 0.9}) {
    const double plain = rel_velocity_integral(v, 1.0, 1.5);
    EXPECT_NEAR(rel_velocity_integral_rest_scaled(v, 1.0, 1.5), plain * std::exp(1.0 / 2.25),
                1e-14 * std::fabs(plain) * 2.0);
  }
  // finite where the unscaled value underflows
  const double scaled = rel_velocity_integral_rest_scaled(0.5, 64.0, 1.0);
  EXPECT_TRUE(std::isfinite(scaled));
  EXPECT_GT(scaled, 0.0);
  EXPECT_EQ(rel_velocity_integral(0.5, 64.0, 1.0), 0.0);
}

TEST(RelVelocityIntegral, Guards) {
  expect_error([] { rel_velocity_integral(1.0, 1.0, 1.0); }, ErrorCode::SpeedLimitExceeded);
  expect_error([] { rel_velocity_integral(-1.5, 1.0, 1.0); }, ErrorCode::SpeedLimitExceeded);
  expect_error([] { rel_velocity_integral(0.5, 1.0, 0.0); }, ErrorCode::NonPositiveLambda);
  EXPECT_NO_THROW(rel_velocity_integral(0.999999, 1.0, 1.0));
}

TEST(GammaPowerIntegral, Examples) {
  EXPECT_EQ(gamma_power_integral(0.0, 1.0, 5), 0.0);
  EXPECT_NEAR(gamma_power_integral(0.6, 1.0, 3), 0.75, 1e-14);
  const double g = 1.25;
  EXPECT_NEAR(gamma_power_integral(0.6, 1.0, 5), 0.6 * (g * g * g + 2.0 * g) / 3.0, 1e-14);
  auto g5 = [](double u) { return std::pow(oracle::gamma(u, 1.0), 5); };
  EXPECT_NEAR(gamma_power_integral(0.6, 1.0, 5), oracle::simpson(g5, 0.0, 0.6, 1e-15), 1e-12);
}

TEST(GammaPowerIntegral, CubeIsVelocityTimesGamma) {
  for (double c : {0.5, 1.0, 3.0}) {
    for (int i = -99; i <= 99; i += 3) {
      const double v = c * i / 100.0;
      const double expected = v * oracle::gamma(v, c);
      EXPECT_NEAR(gamma_power_integral(v, c, 3), expected, 1e-12 * std::fabs(expected)) << v;
    }
  }
}

TEST(GammaPowerIntegral, RejectsBadExponent) {
  expect_error([] { gamma_power_integral(0.5, 1.0, 0); }, ErrorCode::InvalidArgument);
}

TEST(LorentzGamma, SmallVelocityForms) {
  EXPECT_NEAR(gamma_minus_one(1e-9, 1.0), 5e-19, 1e-30);
  EXPECT_NEAR(momentum_gamma(0.75, 1.0, 1.0), 1.25, 1e-15);
  EXPECT_NEAR(momentum_gamma_minus_one(1e-9, 1.0, 1.0), 5e-19, 1e-30);
  EXPECT_NEAR(lorentz_gamma(0.6, 1.0), 1.25, 1e-15);
}

TEST(SecondDerivs, Examples) {
  const SecondDerivs a = eval_with_second_derivs([](auto x, auto v) { return x * v * v; }, 2.0, 3.0);
  EXPECT_EQ(a.f, 18.0);
  EXPECT_EQ(a.fx, 9.0);
  EXPECT_EQ(a.fv, 12.0);
  EXPECT_EQ(a.fvv, 4.0);
  EXPECT_EQ(a.fxv, 6.0);
  EXPECT_EQ(a.fxx, 0.0);

  const SecondDerivs b = eval_with_second_derivs(
      [](auto, auto v) {
        using std::exp;
        return exp(-0.5 * v * v);
      },
      0.7, 0.0);
  EXPECT_EQ(b.f, 1.0);
  EXPECT_EQ(b.fx, 0.0);
  EXPECT_EQ(b.fv, 0.0);
  EXPECT_EQ(b.fvv, -1.0);
  EXPECT_EQ(b.fxv, 0.0);

  const SecondDerivs c =
      eval_with_second_derivs([](auto, auto v) { return gauss_velocity_integral(v, 1.0); }, 0.0, 1.0);
  const double fd = oracle::central_diff([](double v) { return gauss_velocity_integral(v, 1.0); }, 1.0, 1e-6);
  EXPECT_NEAR(c.fv, fd, 1e-8);
  EXPECT_NEAR(c.fv, 0.60653066, 1e-8);
}

namespace {

struct Composite {
  const char* name;
  std::function<double(double, double)> plain;
  std::function<HyperDual(HyperDual, HyperDual)> jet;
};

#define COMPOSITE(NAME, EXPR)                                                     \
  Composite {                                                                    \
    NAME, [](double x, double v) -> double { return EXPR; },                     \
        [](HyperDual x, HyperDual v) -> HyperDual { return EXPR; }               \
  }

std::vector<Composite> composites() {
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;
  return {
      COMPOSITE("x v^2", x * v * v),
      COMPOSITE("gaussian sine", exp(-0.5 * v * v) * sin(x)),
      COMPOSITE("radius", sqrt(1.0 + x * x + v * v)),
      COMPOSITE("log", log(2.0 + x * x * v * v)),
      COMPOSITE("erf cos", multlag::erf(v) * cos(x)),
      COMPOSITE("power", pow(1.0 + v * v, 1.5) * x),
      COMPOSITE("reciprocal", 1.0 / (3.0 + x + v * v)),
      COMPOSITE("exp ratio", exp(x * v) / (1.0 + x * x)),
      COMPOSITE("gauss integral", gauss_velocity_integral(v, 1.3) * exp(-x * x)),
      COMPOSITE("integer power", pow(x * x + 1.0, 3) * v - pow(v, 4)),
  };
}

#undef COMPOSITE

bool close(double got, double want, double rel) { return std::fabs(got - want) <= rel * std::max(std::fabs(want), 1.0); }

}  // namespace

// First partials use h = 1e-5. Second partials use h = 1e-4, where the
// central-difference round-off (~eps |f| / h^2) stays below 1e-7.
TEST(SecondDerivs, CompositeFunctionsAgreeWithFiniteDifferences) {
  oracle::Uniform rng(2024);
  const double h1 = 1e-5;
  const double h2 = 1e-4;
  int checked = 0;
  for (const Composite& fn : composites()) {
    for (int i = 0; i < 1000; ++i) {
      const double x = rng(-2.0, 2.0);
      const double v = rng(-2.0, 2.0);
      const SecondDerivs d = eval_with_second_derivs(fn.jet, x, v);
      const auto& f = fn.plain;
      const double fx = (f(x + h1, v) - f(x - h1, v)) / (2 * h1);
      const double fv = (f(x, v + h1) - f(x, v - h1)) / (2 * h1);
      const double fvv = (f(x, v + h2) - 2 * f(x, v) + f(x, v - h2)) / (h2 * h2);
      const double fxx = (f(x + h2, v) - 2 * f(x, v) + f(x - h2, v)) / (h2 * h2);
      const double fxv =
          (f(x + h2, v + h2) - f(x + h2, v - h2) - f(x - h2, v + h2) + f(x - h2, v - h2)) / (4 * h2 * h2);
      EXPECT_TRUE(close(d.f, f(x, v), 1e-14)) << fn.name;
      EXPECT_TRUE(close(d.fx, fx, 1e-6)) << fn.name << " fx at " << x << "," << v;
      EXPECT_TRUE(close(d.fv, fv, 1e-6)) << fn.name << " fv at " << x << "," << v;
      EXPECT_TRUE(close(d.fvv, fvv, 1e-6)) << fn.name << " fvv at " << x << "," << v;
      EXPECT_TRUE(close(d.fxx, fxx, 1e-6)) << fn.name << " fxx at " << x << "," << v;
      EXPECT_TRUE(close(d.fxv, fxv, 1e-6)) << fn.name << " fxv at " << x << "," << v;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 10000);
}

TEST(HyperDual, SelfMultiplicationKeepsPartials) {
  HyperDual u = HyperDual::second(1.5);
  u *= u;
  EXPECT_EQ(u.re, 2.25);
  EXPECT_EQ(u.e2, 3.0);
  EXPECT_EQ(u.e22, 2.0);
}

TEST(Ode, Rk4StepErrorIsFifthOrder) {
  auto f = [](double, const OdeState<1>& y) { return OdeState<1>{y[0]}; };
  double prev = 0.0;
  for (double h : {0.1, 0.05}) {
    const double err = std::fabs(rk4_step(f, 0.0, OdeState<1>{1.0}, h)[0] - std::exp(h));
    if (prev > 0.0) EXPECT_NEAR(std::log2(prev / err), 5.0, 0.1);
    prev = err;
  }
}

TEST(Ode, DormandPrinceMeetsTolerance) {
  auto f = [](double, const OdeState<2>& y) { return OdeState<2>{y[1], -100.0 * y[0]}; };
  const OdeState<2> y = dopri_advance(f, 0.0, OdeState<2>{1.0, 0.0}, 0.5, 1e-12);
  EXPECT_NEAR(y[0], std::cos(5.0), 1e-10);
  EXPECT_NEAR(y[1], -10.0 * std::sin(5.0), 1e-9);
}
