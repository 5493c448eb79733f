#pragma once

#include <ostream>
#include <string>

#include "multlag/dynamics.hpp"
#include "multlag/twobody.hpp"

namespace multlag::cli {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_twobody_csv(std::ostream& out, const TwoBodyTrajectory& traj);

}  // namespace multlag::cli
