#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "multlag/hamiltonians.hpp"
#include "multlag/hierarchy.hpp"
#include "multlag/lagrangians.hpp"
#include "multlag/rational.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace multlag;

namespace {

ModelParams params(double m = 1.0, double lambda = 1.0, double c = 1.0) { return {m, lambda, c}; }

const Potential kFree{Free{}};
const Potential kSho{Harmonic{1.0, 1.0}};

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.emplace_back(n, d);
  return out;
}

// j! / ((j-k)! k! (2j - 2k - 1)) in long double, independent of the library.
long double coefficient_oracle(int j, int k) {
  long double b = 1.0L;
  for (int i = 1; i <= k; ++i) b = b * (j - k + i) / i;
  return b / (2 * j - 2 * k - 1);
}

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
  EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_DOUBLE_EQ(Rational(1, 5).to_double(), 0.2);
  expect_error([] { Rational(1, 0); }, ErrorCode::InvalidArgument);
}

TEST(Rational, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  expect_error([&] { Rational(big) + Rational(1); }, ErrorCode::Overflow);
  expect_error([&] { Rational(big) * Rational(2); }, ErrorCode::Overflow);
  EXPECT_NO_THROW(Rational(big) * Rational(1, 2));
}

TEST(HierarchyCoefficients, PrintedPolynomials) {
  EXPECT_EQ(hier_coefficients_nr(1), R({{1, 1}, {-1, 1}}));
  EXPECT_EQ(hier_coefficients_nr(2), R({{1, 3}, {2, 1}, {-1, 1}}));
  EXPECT_EQ(hier_coefficients_nr(3), R({{1, 5}, {1, 1}, {3, 1}, {-1, 1}}));
}

TEST(HierarchyCoefficients, GeneralTermsAndBounds) {
  for (int j = 1; j <= kMaxHierarchyOrder; ++j) {
    const std::vector<Rational> c = hier_coefficients_nr(j);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(j + 1));
    EXPECT_EQ(c[0], Rational(1, 2 * j - 1));
    EXPECT_EQ(c[j], Rational(-1));
    if (j >= 2) {
      EXPECT_EQ(c[1], Rational(j, 2 * j - 3));
      EXPECT_EQ(c[j - 1], Rational(j));
    }
    if (j >= 3) EXPECT_EQ(c[2], Rational(j * (j - 1), 2 * (2 * j - 5)));
    for (int k = 0; k <= j; ++k) {
      EXPECT_NEAR(c[k].to_double(), static_cast<double>(coefficient_oracle(j, k)),
                  1e-15 * std::fabs(static_cast<double>(coefficient_oracle(j, k))))
          << j << "," << k;
      EXPECT_EQ(c[k].den() % 2, 1) << "odd denominator at " << j << "," << k;
    }
  }
  expect_error([] { hier_coefficients_nr(0); }, ErrorCode::InvalidArgument);
  expect_error([] { hier_coefficients_nr(21); }, ErrorCode::Overflow);
}

TEST(HierarchyCoefficients, MatchLagrangianEvaluation) {
  oracle::Uniform rng(53);
  for (int j = 1; j <= kMaxHierarchyOrder; ++j) {
    const std::vector<Rational> c = hier_coefficients_nr(j);
    for (int i = 0; i < 20; ++i) {
      const double t = rng(0.0, 2.0);
      const double v = rng(0.0, 2.0);
      double sum = 0.0;
      double scale = 0.0;
      for (int k = 0; k <= j; ++k) {
        const double term = c[k].to_double() * std::pow(t, j - k) * std::pow(v, k);
        sum += term;
        scale += std::fabs(term);
      }
      EXPECT_NEAR(hierarchy_polynomial_nr(j, t, v), sum, 1e-14 * scale) << j;
    }
  }
}

TEST(HierarchyCoefficients, DifferentiateInV) {
  EXPECT_EQ(differentiate_in_v(R({{1, 3}, {2, 1}, {-1, 1}}), 1), R({{2, 1}, {-2, 1}}));
  EXPECT_EQ(differentiate_in_v(R({{1, 3}, {2, 1}, {-1, 1}}), 2), R({{-2, 1}}));
}

TEST(HierarchyRecurrence, ExactForEveryOrder) {
  for (int j = 2; j <= kMaxHierarchyOrder; ++j) {
    EXPECT_TRUE(recurrence_exact_nr(j)) << j;
    EXPECT_TRUE(iterated_recurrence_exact_nr(j)) << j;
  }
}

TEST(HierarchyRecurrence, FloatingPointChecks) {
  // Exact in rationals; the float path only adds round-off.
  EXPECT_TRUE(iterated_recurrence_exact_nr(3));
  const RecurrenceReport r3 = recurrence_check_nr(3, 50);
  EXPECT_LT(r3.max_rel_deviation_iterated, 1e-15);
  const RecurrenceReport r6 = recurrence_check_nr(6, 100);
  EXPECT_EQ(r6.samples, 100);
  EXPECT_LT(r6.max_rel_deviation, 1e-12);
  EXPECT_LT(r6.max_rel_deviation_iterated, 1e-12);
  for (int j = 2; j <= 6; ++j) EXPECT_LT(recurrence_check_rel(params(1.0, 1.0, 1.0), j, 20).max_rel_deviation, 1e-10);
  expect_error([] { recurrence_check_nr(1, 5); }, ErrorCode::InvalidArgument);
}

TEST(SeriesNR, Examples) {
  for (int J : {0, 1, 5, 12}) {
    const SeriesResult r = series_reconstruct_nr(params(1.5, 2.0), kSho, 0.0, 0.0, J);
    EXPECT_EQ(r.partial, 6.0);
    EXPECT_EQ(r.target, 6.0);
    EXPECT_EQ(r.residual, 0.0);
  }
  EXPECT_LT(series_reconstruct_nr(params(1.0, 2.0), kSho, 0.5, 0.5, 12).residual, 1e-10);

  // J = 1 keeps only m lambda^2 + L_1; the tail falls like lambda^-2.
  double prev = 0.0;
  for (double lambda : {2.0, 4.0, 8.0, 16.0}) {
    const ModelParams p = params(1.0, lambda);
    const SeriesResult r = series_reconstruct_nr(p, kSho, 0.5, 0.5, 1);
    const double direct = std::fabs(L_mult_nr_shifted(p, kSho, 0.5, 0.5) - L_additive_nr(p, kSho, 0.5, 0.5));
    EXPECT_NEAR(r.residual, direct, 1e-12 * lambda * lambda);
    if (prev > 0.0) EXPECT_NEAR(prev / r.residual, 4.0, 0.1);
    prev = r.residual;
  }
}

TEST(SeriesNR, ConvergesInTheStatedRegime) {
  oracle::Uniform rng(59);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = params(rng(0.5, 2.0), rng(1.0, 3.0));
    const double ml2 = p.mass * p.lambda * p.lambda;
    const double x = rng(-1.0, 1.0);
    const double v = rng(-1.0, 1.0) * p.lambda;
    const Potential pot(Harmonic{p.mass, 0.8});
    if ((0.5 * p.mass * v * v + eval_V(pot, x)) / ml2 > 0.5) continue;
    EXPECT_LT(series_reconstruct_nr(p, pot, x, v, 12).relative(), 1e-8);
  }
}

TEST(SeriesNR, ResidualRatiosShrink) {
  std::vector<double> residuals;
  for (int J = 4; J <= 12; ++J) residuals.push_back(series_reconstruct_nr(params(), kSho, 1.0, 1.5, J).residual);
  double first_ratio = residuals[1] / residuals[0];
  double last_ratio = residuals.back() / residuals[residuals.size() - 2];
  for (std::size_t i = 1; i < residuals.size(); ++i) EXPECT_LT(residuals[i], residuals[i - 1]);
  EXPECT_LT(last_ratio, first_ratio);
  EXPECT_GT(residuals.back(), 1e-13);
  expect_error([] { series_reconstruct_nr(params(), kSho, 0.0, 0.0, 21); }, ErrorCode::Overflow);
}

TEST(SeriesRel, Examples) {
  EXPECT_LT(series_reconstruct_rel(params(1.0, 2.0, 1.0), kFree, 0.0, 0.3, 12).residual, 1e-8);
  const SeriesResult zero = series_reconstruct_rel(params(1.0, 2.0, 1.0), kFree, 0.0, 0.3, 0);
  EXPECT_EQ(zero.partial, 4.0);
  EXPECT_NEAR(zero.residual, std::fabs(L_mult_rel(params(1.0, 2.0, 1.0), kFree, 0.0, 0.3) - 4.0), 1e-15);
}

TEST(HamiltonianSeries, Examples) {
  const SeriesResult rest = hamiltonian_series(params(1.0, 1.5), kSho, 0.0, 0.0, 0, false);
  EXPECT_EQ(rest.partial, -2.25);
  EXPECT_EQ(rest.target, -2.25);

  const SeriesResult unit = hamiltonian_series(params(), kFree, 0.0, std::sqrt(2.0), 15, false);
  EXPECT_NEAR(unit.target, -std::exp(-1.0), 4e-16);
  EXPECT_LT(unit.residual, 1e-12);
  EXPECT_NEAR(unit.residual, 4.5131679815e-14, 2e-16);
}

// At H_c = 1.25, lambda = 1 the exponential remainder after J = 15 is
// 1.58e-12 (mpmath), just above the 1e-12 bound quoted for this point.
TEST(HamiltonianSeries, RelativisticRemainderAtFiveQuarters) {
  const SeriesResult r = hamiltonian_series(params(), kFree, 0.0, 0.75, 15, true);
  EXPECT_NEAR(r.partial, -0.28650479685860881, 1e-15);
  EXPECT_NEAR(r.target, -0.28650479686019010, 1e-15);
  EXPECT_NEAR(r.residual, 1.5812912905774e-12, 2e-15);
}

TEST(HamiltonianSeries, WithinUnitRadius) {
  oracle::Uniform rng(61);
  for (bool rel : {false, true}) {
    for (int i = 0; i < 100; ++i) {
      const ModelParams p = params(1.0, rng(1.5, 3.0), rng(0.5, 1.0));
      const double ml2 = p.lambda * p.lambda;
      const double x = rng(-1.0, 1.0);
      const double q = rng(-1.0, 1.0);
      const double h = rel ? H_additive_rel(p, kSho, x, q) : H_additive_nr(p, kSho, x, q);
      if (h / ml2 > 1.0) continue;
      EXPECT_LT(hamiltonian_series(p, kSho, x, q, 15, rel).relative(), 1e-12);
    }
  }
}

TEST(HierarchyTable, Csv) {
  EXPECT_EQ(hierarchy_table_csv(3), "j,k,numerator,denominator\n3,0,1,5\n3,1,1,1\n3,2,3,1\n3,3,-1,1\n");
  expect_error([] { hierarchy_table_csv(25); }, ErrorCode::Overflow);
}
