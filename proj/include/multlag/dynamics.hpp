#pragma once

#include <string>
#include <vector>

#include "multlag/eom.hpp"

namespace multlag {

enum class Method { RK4, RK45 };

/// Which first-order system integrate_hamiltonian follows.
/// Kinematic: xdot = p/mu, pdot from momentum_rate_kinematic.
/// Canonical: Hamilton's equations for the model's own H.
enum class HamiltonFlow { Kinematic, Canonical };

/// Hierarchy Hamiltonian runs need |H_std(0)| above this.
inline constexpr double kDegenerateEnergy = 1e-8;

struct IntegrationOptions {
  double dt = 1e-3;
  int n_steps = 1000;
  Method method = Method::RK4;
  int stride = 1;
  HamiltonFlow flow = HamiltonFlow::Kinematic;
  double rk45_tol = 1e-10;

  void validate() const;
};

/// One recorded state. v and p are both filled whatever the formulation:
/// p is dL/dv on the Lagrangian side and the integrated momentum on the
/// Hamiltonian side. h_std is the additive H at the kinetic momentum,
/// h_model the model's own conserved H.
struct Sample {
  double t = 0.0;
  double x = 0.0;
  double v = 0.0;
  double p = 0.0;
  double h_std = 0.0;
  double h_model = 0.0;
};

struct Trajectory {
  std::string model;
  double step = 0.0;
  std::vector<Sample> samples;
  bool aborted = false;
  ErrorCode abort_code = ErrorCode::InvalidArgument;
  std::string abort_message;
};

/// Integrates xddot = acceleration_from_lagrangian. Errors at the initial
/// state throw; later ones stop the run and set the abort fields.
Trajectory integrate_lagrangian(const Model& model, double x0, double v0, const IntegrationOptions& options);

Trajectory integrate_hamiltonian(const Model& model, double x0, double p0, const IntegrationOptions& options);

/// Integrates the reference equation of motion directly.
Trajectory integrate_reference(Reference kind, const ModelParams& params, const Potential& pot, double x0,
                               double v0, const IntegrationOptions& options);

/// max_t |H(t) - H(0)| / max(|H(0)|, 1e-300) over the h_model column.
double conserved_drift(const Trajectory& traj);

struct TrajectoryDeviation {
  double x = 0.0;
  double v = 0.0;
  double p = 0.0;
};

/// Componentwise sup-norm deviations; GridMismatch unless the time grids match.
TrajectoryDeviation compare_trajectories(const Trajectory& a, const Trajectory& b);

}  // namespace multlag
