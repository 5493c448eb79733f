#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "multlag/hyperdual.hpp"

namespace multlag {

/// Points closer than this to the Calogero-Moser singularity are rejected.
inline constexpr double kCalogeroMoserGuard = 1e-8;

struct Free {};

/// V = m omega^2 x^2 / 2.
struct Harmonic {
  double mass = 1.0;
  double omega = 1.0;
};

/// Pair interaction V = g^2 x^2 in the relative coordinate.
struct PairHarmonic {
  double g = 1.0;
};

/// V = g^2 / x^2, defined for x != 0.
struct CalogeroMoser {
  double g = 1.0;
};

/// V = sum_k coeffs[k] x^k; must be bounded below (even degree, positive lead).
struct Polynomial {
  std::vector<double> coeffs;
};

using PotentialKind = std::variant<Free, Harmonic, PairHarmonic, CalogeroMoser, Polynomial>;

class Potential {
 public:
  Potential() = default;
  Potential(PotentialKind kind);  // NOLINT: a kind is a potential

  const PotentialKind& kind() const noexcept { return kind_; }
  std::string name() const;
  bool is_free() const noexcept { return std::holds_alternative<Free>(kind_); }
  bool is_even() const;

  /// Throws DomainError outside the domain of the potential.
  void check_domain(double x) const;

  template <Scalar T>
  T value(const T& x) const {
    check_domain(value_of(x));
    return std::visit([&x](const auto& k) -> T { return eval(k, x); }, kind_);
  }

  double derivative(double x) const;

 private:
  template <class T> static T eval(const Free&, const T&) { return T(0.0); }
  template <class T> static T eval(const Harmonic& h, const T& x) {
    return 0.5 * h.mass * h.omega * h.omega * x * x;
  }
  template <class T> static T eval(const PairHarmonic& p, const T& x) { return p.g * p.g * x * x; }
  template <class T> static T eval(const CalogeroMoser& cm, const T& x) { return cm.g * cm.g / (x * x); }
  template <class T> static T eval(const Polynomial& poly, const T& x) {
    T sum(0.0);
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) sum = sum * x + *it;
    return sum;
  }

  PotentialKind kind_ = Free{};
};

double eval_V(const Potential& pot, double x);
double eval_dV(const Potential& pot, double x);

}  // namespace multlag
