#include "multlag/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "multlag/ode.hpp"

namespace multlag {

void IntegrationOptions::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorCode::InvalidArgument, "dt must be positive");
  if (n_steps < 1) fail(ErrorCode::InvalidArgument, "n_steps must be >= 1");
  if (stride < 1) fail(ErrorCode::InvalidArgument, "stride must be >= 1");
  if (!(rk45_tol > 0.0)) fail(ErrorCode::InvalidArgument, "rk45 tolerance must be positive");
}

namespace {

using State = OdeState<2>;

template <class Rhs, class Record>
void run(Trajectory& traj, Rhs& rhs, State y, const IntegrationOptions& options, Record& record) {
  traj.step = options.dt;
  traj.samples.push_back(record(0.0, y));
  for (int i = 1; i <= options.n_steps; ++i) {
    const double t0 = (i - 1) * options.dt;
    try {
      y = options.method == Method::RK4 ? rk4_step(rhs, t0, y, options.dt)
                                        : dopri_advance(rhs, t0, y, options.dt, options.rk45_tol);
      if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
        fail(ErrorCode::DomainError, "state became non-finite at t = " + std::to_string(i * options.dt));
      }
      if (i % options.stride == 0) traj.samples.push_back(record(i * options.dt, y));
    } catch (const Error& e) {
      traj.aborted = true;
      traj.abort_code = e.code();
      traj.abort_message = e.what();
      return;
    }
  }
}

}  // namespace

Trajectory integrate_lagrangian(const Model& model, double x0, double v0, const IntegrationOptions& options) {
  model.validate();
  options.validate();
  Trajectory traj;
  traj.model = model.describe() + " lagrangian";
  auto rhs = [&model](double, const State& y) { return State{y[1], acceleration_from_lagrangian(model, y[0], y[1])}; };
  auto record = [&model](double t, const State& y) {
    const SecondDerivs d = lagrangian_derivs(model, y[0], y[1]);
    const double h_std = standard_hamiltonian(model, y[0], kinetic_momentum(model, y[1]));
    return Sample{t, y[0], y[1], d.fv, h_std, y[1] * d.fv - d.f};
  };
  // Rejects degenerate initial data before anything is recorded.
  acceleration_from_lagrangian(model, x0, v0);
  run(traj, rhs, State{x0, v0}, options, record);
  return traj;
}

Trajectory integrate_hamiltonian(const Model& model, double x0, double p0, const IntegrationOptions& options) {
  model.validate();
  options.validate();
  if (is_hierarchy(model.family) && std::fabs(standard_hamiltonian(model, x0, p0)) <= kDegenerateEnergy) {
    fail(ErrorCode::DegenerateEnergy, "hierarchy Hamiltonian run needs |H(0)| > 1e-8");
  }
  Trajectory traj;
  const bool canonical = options.flow == HamiltonFlow::Canonical;
  traj.model = model.describe() + (canonical ? " hamiltonian canonical" : " hamiltonian kinematic");
  auto rhs = [&model, canonical](double, const State& y) {
    const PhaseRate r = canonical ? hamilton_rhs(model, y[0], y[1]) : kinematic_rhs(model, y[0], y[1]);
    return State{r.dx, r.dp};
  };
  auto record = [&model, canonical](double t, const State& y) {
    const double v = canonical ? hamilton_rhs(model, y[0], y[1]).dx : kinetic_velocity(model, y[1]);
    return Sample{t, y[0], v, y[1], standard_hamiltonian(model, y[0], y[1]), hamiltonian(model, y[0], y[1])};
  };
  rhs(0.0, State{x0, p0});
  run(traj, rhs, State{x0, p0}, options, record);
  return traj;
}

Trajectory integrate_reference(Reference kind, const ModelParams& params, const Potential& pot, double x0,
                               double v0, const IntegrationOptions& options) {
  params.validate();
  options.validate();
  Model model;
  model.family = kind == Reference::Newtonian ? Family::AdditiveNR : Family::AdditiveRel;
  model.params = params;
  model.potential = pot;
  Trajectory traj;
  traj.model = std::string(kind == Reference::Newtonian ? "newtonian" : "relativistic") + " reference " +
               pot.name();
  auto rhs = [&](double, const State& y) {
    return State{y[1], reference_acceleration(kind, params, pot, y[0], y[1])};
  };
  auto record = [&model](double t, const State& y) {
    const double p = kinetic_momentum(model, y[1]);
    const double h = standard_hamiltonian(model, y[0], p);
    return Sample{t, y[0], y[1], p, h, h};
  };
  rhs(0.0, State{x0, v0});
  run(traj, rhs, State{x0, v0}, options, record);
  return traj;
}

double conserved_drift(const Trajectory& traj) {
  if (traj.samples.empty()) fail(ErrorCode::InvalidArgument, "trajectory has no samples");
  const double h0 = traj.samples.front().h_model;
  double worst = 0.0;
  for (const Sample& s : traj.samples) worst = std::max(worst, std::fabs(s.h_model - h0));
  return worst / std::max(std::fabs(h0), 1e-300);
}

TrajectoryDeviation compare_trajectories(const Trajectory& a, const Trajectory& b) {
  if (a.samples.size() != b.samples.size()) fail(ErrorCode::GridMismatch, "trajectories differ in length");
  TrajectoryDeviation dev;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const Sample& s = a.samples[i];
    const Sample& r = b.samples[i];
    if (s.t != r.t) fail(ErrorCode::GridMismatch, "time grids differ at sample " + std::to_string(i));
    dev.x = std::max(dev.x, std::fabs(s.x - r.x));
    dev.v = std::max(dev.v, std::fabs(s.v - r.v));
    dev.p = std::max(dev.p, std::fabs(s.p - r.p));
  }
  return dev;
}

}  // namespace multlag
