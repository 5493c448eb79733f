#pragma once

#include "multlag/hamiltonians.hpp"

namespace multlag {

/// Euler-Lagrange extraction is refused when |d2L/dv2| < kHessianFloor * m.
inline constexpr double kHessianFloor = 1e-10;

/// Relativistic scans stay this fraction of c inside the light cone.
inline constexpr double kLightConeMargin = 1e-6;

enum class Reference { Newtonian, Relativistic };

constexpr Reference reference_for(Family f) {
  return is_relativistic(f) ? Reference::Relativistic : Reference::Newtonian;
}

/// a = (dL/dx - v d2L/dxdv) / (d2L/dv2).
double acceleration_from_lagrangian(const Model& model, double x, double v);

/// -V'(x)/m, or -V'(x)/(m gamma^3).
double reference_acceleration(Reference kind, const ModelParams& params, const Potential& pot, double x,
                              double v);

struct PhaseRate {
  double dx = 0.0;
  double dp = 0.0;
};

/// Canonical Hamilton equations (dH/dp, -dH/dx).
PhaseRate hamilton_rhs(const Model& model, double x, double p);

/**
 * Momentum rate from -dH/dx = d/dt(mu dH/dp) with p = mu xdot, where mu = m,
 * or gamma m for the relativistic families. Solving for pdot gives
 *
 *   pdot = (-H_x - p H_px) / (mu' H_p + mu H_pp),
 *
 * which is -V' for every family whenever the denominator is nonzero.
 * Below kHessianFloor the rate is the mean of the rates at p -+ delta when
 * those agree; otherwise DegenerateHessian is thrown.
 */
double momentum_rate_kinematic(const Model& model, double x, double p);

/// Offset (relative to max(1, |p|)) used to take the limit through a removable
/// zero of the kinematic denominator, as at |p| = m lambda for H_mult_nr.
inline constexpr double kRemovableStep = 1e-6;

/// xdot and pdot of the kinematic flow.
PhaseRate kinematic_rhs(const Model& model, double x, double p);

/// Acceleration implied by the kinematic flow at p = kinetic_momentum(v).
double acceleration_from_hamiltonian(const Model& model, double x, double v);

struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  double v_min = -1.0;
  double v_max = 1.0;
  int n = 21;

  void validate() const;
  double x_at(int i) const;
  double v_at(int i) const;
};

struct EomReport {
  int grid_size = 0;
  double max_abs_residual = 0.0;
  double worst_x = 0.0;
  double worst_v = 0.0;
  int degenerate_points_skipped = 0;
};

enum class Formulation { Lagrangian, Hamiltonian };

/// Max |a_model - a_reference| over an n x n grid; degenerate points are counted, not fatal.
EomReport eom_equivalence_scan(const Model& model, Reference reference, const GridSpec& grid,
                               Formulation formulation = Formulation::Lagrangian);

}  // namespace multlag
