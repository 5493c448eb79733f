#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multlag/hamiltonians.hpp"
#include "multlag/rational.hpp"

namespace multlag {

/// Largest j whose coefficient table is exact in 64-bit rationals.
inline constexpr int kMaxHierarchyOrder = 20;

/// c_{j,k} = j! / ((j-k)! k! (2j-2k-1)) for k = 0..j. Overflow for j > 20.
std::vector<Rational> hier_coefficients_nr(int j);

/// Coefficients of d^n/dV^n of the polynomial sum_k coeffs[k] T^(j-k) V^k,
/// indexed by the power of V.
std::vector<Rational> differentiate_in_v(const std::vector<Rational>& coeffs, int n);

/// k c_{j,k} = j c_{j-1,k-1} for all k, checked in rationals.
bool recurrence_exact_nr(int j);

/// d^(j-1)/dV^(j-1) of the j-th member equals j! (T - V), checked in rationals.
bool iterated_recurrence_exact_nr(int j);

struct RecurrenceReport {
  int samples = 0;
  double max_rel_deviation = 0.0;
  double max_rel_deviation_iterated = 0.0;
};

/// Floating-point check of the V-recurrences at random (T, V) in [0, 2]^2.
/// Deviations are relative to the sum of absolute term magnitudes.
RecurrenceReport recurrence_check_nr(int j, int samples, std::uint64_t seed = 1);

/// dL_{j,c}/dV = j L_{j-1,c} at random (v, V), |v| <= 0.9c, V in [0, 2].
RecurrenceReport recurrence_check_rel(const ModelParams& params, int j, int samples, std::uint64_t seed = 1);

struct SeriesResult {
  double partial = 0.0;
  double target = 0.0;
  double residual = 0.0;

  double relative() const;
};

/// sum_{j=0}^{J} (1/j!) (-1/(m lambda^2))^(j-1) L_j against L_mult_nr.
/// The j = 0 term is m lambda^2.
SeriesResult series_reconstruct_nr(const ModelParams& params, const Potential& pot, double x, double v, int J);

/// Same with the relativistic members, against L_mult_rel.
SeriesResult series_reconstruct_rel(const ModelParams& params, const Potential& pot, double x, double v, int J);

/// Exponential series of -m lambda^2 exp(-H / (m lambda^2)) in powers of H,
/// with H = H_N(x, p) or H_c(x, p).
SeriesResult hamiltonian_series(const ModelParams& params, const Potential& pot, double x, double p, int J,
                                bool relativistic);

/// CSV rows j,k,numerator,denominator for one order, with header.
std::string hierarchy_table_csv(int j);

}  // namespace multlag
