#include "format.hpp"

#include <array>
#include <charconv>

namespace multlag::cli {

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

namespace {

void write_abort(std::ostream& out, bool aborted, ErrorCode code, const std::string& message) {
  if (aborted) out << "# aborted: " << to_string(code) << ": " << message << "\n";
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,x,v,p,H_std,H_model\n";
  for (const Sample& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.v) << ','
        << format_double(s.p) << ',' << format_double(s.h_std) << ',' << format_double(s.h_model) << '\n';
  }
  write_abort(out, traj.aborted, traj.abort_code, traj.abort_message);
  out.flush();
}

void write_twobody_csv(std::ostream& out, const TwoBodyTrajectory& traj) {
  out << "t,X,x,VX,vx,H_model\n";
  for (const TwoBodySample& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.X) << ',' << format_double(s.x) << ','
        << format_double(s.vX) << ',' << format_double(s.vx) << ',' << format_double(s.h_model) << '\n';
  }
  write_abort(out, traj.aborted, traj.abort_code, traj.abort_message);
  out.flush();
}

}  // namespace multlag::cli
