#include "multlag/limits.hpp"

#include <cmath>

namespace multlag {

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) fail(ErrorCode::InvalidArgument, "slope fit needs >= 2 matching points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) fail(ErrorCode::DomainError, "slope fit needs positive data");
    const double lx = std::log2(xs[i]);
    const double ly = std::log2(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

const char* limit_name(LimitKind kind) {
  switch (kind) {
    case LimitKind::LagrangianNR: return "lagrangian_nr";
    case LimitKind::HamiltonianNR: return "hamiltonian_nr";
    case LimitKind::LagrangianRel: return "lagrangian_rel";
    case LimitKind::HamiltonianRel: return "hamiltonian_rel";
    case LimitKind::TwoBodyLagrangian: return "twobody_lagrangian";
    case LimitKind::TwoBodyHamiltonian: return "twobody_hamiltonian";
  }
  return "unknown";
}

double lambda_limit_deviation(LimitKind kind, const ModelParams& params, const Potential& pot, const LimitPoint& at,
                              TwoBodyExponent exponent) {
  switch (kind) {
    case LimitKind::LagrangianNR:
      return std::fabs(L_mult_nr_shifted(params, pot, at.x, at.q) - L_additive_nr(params, pot, at.x, at.q));
    case LimitKind::HamiltonianNR:
      return std::fabs(H_mult_nr_shifted(params, pot, at.x, at.q) - H_additive_nr(params, pot, at.x, at.q));
    case LimitKind::LagrangianRel:
      return std::fabs(L_mult_rel_shifted(params, pot, at.x, at.q) - L_additive_rel(params, pot, at.x, at.q));
    case LimitKind::HamiltonianRel:
      return std::fabs(H_mult_rel_shifted(params, pot, at.x, at.q) - H_additive_rel(params, pot, at.x, at.q));
    case LimitKind::TwoBodyLagrangian:
      return std::fabs(L2_mult_shifted(params, pot, at.x, at.qX, at.q) -
                       L2_additive(params, pot, 0.0, at.x, at.qX, at.q));
    case LimitKind::TwoBodyHamiltonian:
      return std::fabs(H2_mult_shifted(params, pot, at.x, at.qX, at.q, exponent) -
                       H2_additive(params, pot, 0.0, at.x, at.qX, at.q));
  }
  fail(ErrorCode::InvalidArgument, "unknown limit kind");
}

double c_limit_deviation(bool hamiltonian, const ModelParams& params, const Potential& pot, const LimitPoint& at) {
  if (hamiltonian) {
    return std::fabs(H_mult_rel_rest_scaled(params, pot, at.x, at.q) - H_mult_nr(params, pot, at.x, at.q));
  }
  return std::fabs(L_mult_rel_rest_scaled(params, pot, at.x, at.q) - L_mult_nr(params, pot, at.x, at.q));
}

double double_limit_deviation(const ModelParams& params, const Potential& pot, const LimitPoint& at) {
  const double mc2 = params.mass * params.c * params.c;
  return std::fabs(L_mult_rel_shifted(params, pot, at.x, at.q) + mc2 - L_additive_nr(params, pot, at.x, at.q));
}

namespace {

template <class Eval>
LimitFit fit(int k_min, int k_max, Eval eval) {
  if (k_max <= k_min) fail(ErrorCode::InvalidArgument, "limit fit needs k_max > k_min");
  LimitFit out;
  for (int k = k_min; k <= k_max; ++k) {
    const double scale = std::ldexp(1.0, k);
    out.scales.push_back(scale);
    out.deviations.push_back(eval(scale));
  }
  out.slope = loglog_slope(out.scales, out.deviations);
  return out;
}

}  // namespace

LimitFit fit_lambda_limit(LimitKind kind, ModelParams params, const Potential& pot, const LimitPoint& at, int k_min,
                          int k_max, TwoBodyExponent exponent) {
  return fit(k_min, k_max, [&](double scale) {
    params.lambda = scale;
    return lambda_limit_deviation(kind, params, pot, at, exponent);
  });
}

LimitFit fit_c_limit(bool hamiltonian, ModelParams params, const Potential& pot, const LimitPoint& at, int k_min,
                     int k_max) {
  return fit(k_min, k_max, [&](double scale) {
    params.c = scale;
    return c_limit_deviation(hamiltonian, params, pot, at);
  });
}

LimitFit fit_double_limit(ModelParams params, const Potential& pot, const LimitPoint& at, int k_min, int k_max) {
  return fit(k_min, k_max, [&](double scale) {
    params.c = scale;
    params.lambda = scale * scale * scale;
    return double_limit_deviation(params, pot, at);
  });
}

}  // namespace multlag
