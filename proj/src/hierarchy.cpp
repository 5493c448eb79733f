#include "multlag/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace multlag {

namespace {

void require_order(int j) {
  if (j < 1) fail(ErrorCode::InvalidArgument, "hierarchy order j must be >= 1");
  if (j > kMaxHierarchyOrder) {
    fail(ErrorCode::Overflow, "hierarchy order j = " + std::to_string(j) + " exceeds the exact range (20)");
  }
}

Rational rational_binomial(int n, int k) {
  Rational result(1);
  for (int i = 1; i <= k; ++i) result = result * Rational(n - k + i, i);
  return result;
}

// Evaluates sum_k coeffs[k] T^(deg-k) V^k together with the sum of |terms|.
std::pair<double, double> evaluate_tv(const std::vector<Rational>& coeffs, int deg, double t, double v) {
  double value = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double term = coeffs[k].to_double() * ipow(t, deg - static_cast<int>(k)) * ipow(v, static_cast<int>(k));
    value += term;
    scale += std::fabs(term);
  }
  return {value, scale};
}

double relative_gap(double a, double b, double scale) {
  return std::fabs(a - b) / std::max({scale, std::fabs(a), std::fabs(b), 1e-300});
}

}  // namespace

std::vector<Rational> hier_coefficients_nr(int j) {
  require_order(j);
  std::vector<Rational> coeffs;
  coeffs.reserve(j + 1);
  for (int k = 0; k <= j; ++k) coeffs.push_back(rational_binomial(j, k) / Rational(2 * (j - k) - 1));
  return coeffs;
}

std::vector<Rational> differentiate_in_v(const std::vector<Rational>& coeffs, int n) {
  std::vector<Rational> out = coeffs;
  for (int step = 0; step < n; ++step) {
    std::vector<Rational> next;
    for (std::size_t k = 1; k < out.size(); ++k) next.push_back(out[k] * Rational(static_cast<std::int64_t>(k)));
    out = std::move(next);
  }
  return out;
}

bool recurrence_exact_nr(int j) {
  require_order(j);
  if (j < 2) fail(ErrorCode::InvalidArgument, "the recurrence needs j >= 2");
  const std::vector<Rational> derivative = differentiate_in_v(hier_coefficients_nr(j), 1);
  const std::vector<Rational> previous = hier_coefficients_nr(j - 1);
  if (derivative.size() != previous.size()) return false;
  for (std::size_t k = 0; k < previous.size(); ++k) {
    if (!(derivative[k] == Rational(j) * previous[k])) return false;
  }
  return true;
}

bool iterated_recurrence_exact_nr(int j) {
  require_order(j);
  const std::vector<Rational> derivative = differentiate_in_v(hier_coefficients_nr(j), j - 1);
  Rational factorial(1);
  for (int i = 2; i <= j; ++i) factorial = factorial * Rational(i);
  return derivative.size() == 2 && derivative[0] == factorial && derivative[1] == Rational(-1) * factorial;
}

RecurrenceReport recurrence_check_nr(int j, int samples, std::uint64_t seed) {
  require_order(j);
  if (j < 2) fail(ErrorCode::InvalidArgument, "the recurrence needs j >= 2");
  const std::vector<Rational> coeffs = hier_coefficients_nr(j);
  const std::vector<Rational> first = differentiate_in_v(coeffs, 1);
  const std::vector<Rational> iterated = differentiate_in_v(coeffs, j - 1);
  const std::vector<Rational> previous = hier_coefficients_nr(j - 1);
  double factorial = 1.0;
  for (int i = 2; i <= j; ++i) factorial *= i;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  RecurrenceReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const double t = dist(rng);
    const double v = dist(rng);
    const auto [d, d_scale] = evaluate_tv(first, j - 1, t, v);
    const auto [prev, prev_scale] = evaluate_tv(previous, j - 1, t, v);
    report.max_rel_deviation =
        std::max(report.max_rel_deviation, relative_gap(d, j * prev, std::max(d_scale, j * prev_scale)));
    const auto [top, top_scale] = evaluate_tv(iterated, 1, t, v);
    report.max_rel_deviation_iterated =
        std::max(report.max_rel_deviation_iterated,
                 relative_gap(top / factorial, t - v, std::max(top_scale / factorial, std::fabs(t) + std::fabs(v))));
  }
  return report;
}

RecurrenceReport recurrence_check_rel(const ModelParams& params, int j, int samples, std::uint64_t seed) {
  params.validate();
  if (j < 2) fail(ErrorCode::InvalidArgument, "the recurrence needs j >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> speed(-0.9 * params.c, 0.9 * params.c);
  std::uniform_real_distribution<double> pot(0.0, 2.0);
  const double rest = params.mass * params.c * params.c;
  RecurrenceReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const double v = speed(rng);
    const double potential = pot(rng);
    // Differentiate the V-polynomial term by term from its coefficients.
    double derivative = 0.0;
    double scale = 0.0;
    for (int k = 1; k <= j; ++k) {
      const double term = -k * binomial(j, k) * ipow(rest, j - k) * P_j(v, params.c, j - k) * ipow(potential, k - 1);
      derivative += term;
      scale += std::fabs(term);
    }
    const double previous = j * hierarchy_polynomial_rel(params, j - 1, v, potential);
    report.max_rel_deviation = std::max(report.max_rel_deviation, relative_gap(derivative, previous, scale));
  }
  return report;
}

double SeriesResult::relative() const { return residual / std::max(std::fabs(target), 1e-300); }

namespace {

// Accumulates sum_{j=0}^{J} (1/j!) (-u)^(j-1) member(j) with member(0) = -1.
template <class Member>
double hierarchy_sum(double ml2, int J, Member member) {
  double sum = ml2;
  double factor = 1.0;  // (1/j!) (-u)^(j-1) at j = 1
  for (int j = 1; j <= J; ++j) {
    if (j > 1) factor *= -1.0 / (ml2 * j);
    sum += factor * member(j);
  }
  return sum;
}

SeriesResult make_result(double partial, double target) { return {partial, target, std::fabs(partial - target)}; }

}  // namespace

SeriesResult series_reconstruct_nr(const ModelParams& params, const Potential& pot, double x, double v, int J) {
  params.validate();
  if (J < 0) fail(ErrorCode::InvalidArgument, "J must be >= 0");
  if (J > kMaxHierarchyOrder) fail(ErrorCode::Overflow, "J exceeds the exact coefficient range (20)");
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double kinetic = 0.5 * params.mass * v * v;
  const double potential = pot.value(x);
  const double partial = hierarchy_sum(ml2, J, [&](int j) {
    return evaluate_tv(hier_coefficients_nr(j), j, kinetic, potential).first;
  });
  return make_result(partial, L_mult_nr(params, pot, x, v));
}

SeriesResult series_reconstruct_rel(const ModelParams& params, const Potential& pot, double x, double v, int J) {
  params.validate();
  if (J < 0) fail(ErrorCode::InvalidArgument, "J must be >= 0");
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double partial =
      hierarchy_sum(ml2, J, [&](int j) { return L_hier_rel(params, pot, j, x, v); });
  return make_result(partial, L_mult_rel(params, pot, x, v));
}

SeriesResult hamiltonian_series(const ModelParams& params, const Potential& pot, double x, double p, int J,
                                bool relativistic) {
  params.validate();
  if (J < 0) fail(ErrorCode::InvalidArgument, "J must be >= 0");
  const double ml2 = params.mass * params.lambda * params.lambda;
  const double h = relativistic ? H_additive_rel(params, pot, x, p) : H_additive_nr(params, pot, x, p);
  // The j = 0 term is -m lambda^2 times H^0 = 1.
  double sum = -ml2;
  double factor = -ml2;
  for (int j = 1; j <= J; ++j) {
    factor *= -1.0 / (ml2 * j);
    sum += factor * ipow(h, j);
  }
  const double target = relativistic ? H_mult_rel(params, pot, x, p) : H_mult_nr(params, pot, x, p);
  return make_result(sum, target);
}

std::string hierarchy_table_csv(int j) {
  const std::vector<Rational> coeffs = hier_coefficients_nr(j);
  std::string out = "j,k,numerator,denominator\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(coeffs[k].num()) + "," +
           std::to_string(coeffs[k].den()) + "\n";
  }
  return out;
}

}  // namespace multlag
