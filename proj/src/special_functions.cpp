#include "multlag/special_functions.hpp"

#include <array>
#include <cmath>

namespace multlag {
namespace {

// Cody, "Rational Chebyshev approximations for the error function" (1969).
constexpr std::array<double, 5> kA = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                                      3209.37758913846947, .185777706184603153};
constexpr std::array<double, 4> kB = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                                      2844.23683343917062};
constexpr std::array<double, 9> kC = {.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                                      298.635138197400131, 881.95222124176909,  1712.04761263407058,
                                      2051.07837782607147, 1230.33935479799725, 2.15311535474403846e-8};
constexpr std::array<double, 8> kD = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                                      1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                                      3439.36767414372164, 1230.33935480374942};
constexpr std::array<double, 6> kP = {.305326634961232344, .360344899949804439, .125781726111229246,
                                      .0160837851487422766, 6.58749161529837803e-4, .0163153871373020978};
constexpr std::array<double, 5> kQ = {2.56852019228982242, 1.87295284992346047, .527905102951428412,
                                      .0605183413124413191, .00233520497626869185};

constexpr double kThreshold = 0.46875;
constexpr double kSmall = 1.11e-16;
constexpr double kBig = 26.543;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// erf(x) for |x| <= kThreshold.
double erf_small(double x) {
  const double y = std::fabs(x);
  const double ysq = y > kSmall ? y * y : 0.0;
  double num = kA[4] * ysq;
  double den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kA[i]) * ysq;
    den = (den + kB[i]) * ysq;
  }
  return x * (num + kA[3]) / (den + kB[3]);
}

// exp(-y*y) without the cancellation of forming y*y directly.
double gaussian_tail_factor(double y) {
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del);
}

// erfc(y) for y > kThreshold.
double erfc_large(double y) {
  if (y <= 4.0) {
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kC[i]) * y;
      den = (den + kD[i]) * y;
    }
    return gaussian_tail_factor(y) * (num + kC[7]) / (den + kD[7]);
  }
  if (y >= kBig) return 0.0;
  const double ysq = 1.0 / (y * y);
  double num = kP[5] * ysq;
  double den = ysq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * ysq;
    den = (den + kQ[i]) * ysq;
  }
  double r = ysq * (num + kP[4]) / (den + kQ[4]);
  r = (kInvSqrtPi - r) / y;
  return gaussian_tail_factor(y) * r;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double y = std::fabs(x);
  if (y <= kThreshold) return erf_small(x);
  const double r = 1.0 - erfc_large(y);
  return x < 0.0 ? -r : r;
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  const double y = std::fabs(x);
  if (y <= kThreshold) return 1.0 - erf_small(x);
  const double r = erfc_large(y);
  return x < 0.0 ? 2.0 - r : r;
}

}  // namespace multlag
