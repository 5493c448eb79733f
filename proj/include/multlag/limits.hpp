#pragma once

#include <span>
#include <vector>

#include "multlag/twobody.hpp"

namespace multlag {

/// Least-squares slope of log2(y) against log2(x).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

enum class LimitKind {
  LagrangianNR,      // L_mult_nr - m lambda^2 -> L_N
  HamiltonianNR,     // H_mult_nr + m lambda^2 -> H_N
  LagrangianRel,     // L_mult_rel - m lambda^2 -> L_c
  HamiltonianRel,    // H_mult_rel + m lambda^2 -> H_c
  TwoBodyLagrangian, // L2_mult - m lambda^2 -> (m/4)(Xdot^2 + xdot^2) - V
  TwoBodyHamiltonian // H2_mult + m lambda^2 -> (P^2 + p^2)/(4m) + V
};

const char* limit_name(LimitKind kind);

/// Point at which a limit is evaluated. q is v for Lagrangians and p for
/// Hamiltonians; qX is the center-of-mass velocity or momentum.
struct LimitPoint {
  double x = 0.5;
  double q = 0.3;
  double qX = 0.2;
};

/// |shifted multiplicative form - additive form| at the given parameters.
double lambda_limit_deviation(LimitKind kind, const ModelParams& params, const Potential& pot, const LimitPoint& at,
                              TwoBodyExponent exponent = TwoBodyExponent::Mirrored);

/// |exp(c^2/lambda^2) L_mult_rel - L_mult_nr| (or the H pair) at the given parameters.
double c_limit_deviation(bool hamiltonian, const ModelParams& params, const Potential& pot, const LimitPoint& at);

/// |L_mult_rel - m lambda^2 + m c^2 - L_N|.
double double_limit_deviation(const ModelParams& params, const Potential& pot, const LimitPoint& at);

struct LimitFit {
  std::vector<double> scales;
  std::vector<double> deviations;
  double slope = 0.0;
};

/// Deviations at lambda = 2^k for k in [k_min, k_max] and their log-log slope.
LimitFit fit_lambda_limit(LimitKind kind, ModelParams params, const Potential& pot, const LimitPoint& at, int k_min,
                          int k_max, TwoBodyExponent exponent = TwoBodyExponent::Mirrored);

/// Deviations at c = 2^k and their log-log slope.
LimitFit fit_c_limit(bool hamiltonian, ModelParams params, const Potential& pot, const LimitPoint& at, int k_min,
                     int k_max);

/// Deviations of the double limit at c = 2^k, lambda = 2^(3k).
LimitFit fit_double_limit(ModelParams params, const Potential& pot, const LimitPoint& at, int k_min, int k_max);

}  // namespace multlag
