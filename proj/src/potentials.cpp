#include "multlag/potentials.hpp"

#include <string>

#include "multlag/error.hpp"

namespace multlag {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
}

}  // namespace

Potential::Potential(PotentialKind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [](const Free&) {},
                 [](const Harmonic& h) {
                   if (!(h.mass > 0.0)) fail(ErrorCode::InvalidArgument, "harmonic mass must be positive");
                   require_finite(h.omega, "omega");
                 },
                 [](const PairHarmonic& p) { require_finite(p.g, "coupling g"); },
                 [](const CalogeroMoser& cm) { require_finite(cm.g, "coupling g"); },
                 [](Polynomial& poly) {
                   while (!poly.coeffs.empty() && poly.coeffs.back() == 0.0) poly.coeffs.pop_back();
                   for (double c : poly.coeffs) require_finite(c, "polynomial coefficient");
                   const std::size_t n = poly.coeffs.size();
                   if (n > 1 && ((n - 1) % 2 != 0 || poly.coeffs.back() < 0.0)) {
                     fail(ErrorCode::DomainError, "polynomial potential must be bounded below (even degree, positive lead)");
                   }
                 },
             },
             kind_);
}

std::string Potential::name() const {
  return std::visit(Overloaded{
                        [](const Free&) { return std::string("free"); },
                        [](const Harmonic&) { return std::string("harmonic"); },
                        [](const PairHarmonic&) { return std::string("pair-harmonic"); },
                        [](const CalogeroMoser&) { return std::string("calogero-moser"); },
                        [](const Polynomial&) { return std::string("polynomial"); },
                    },
                    kind_);
}

bool Potential::is_even() const {
  if (const auto* poly = std::get_if<Polynomial>(&kind_)) {
    for (std::size_t k = 1; k < poly->coeffs.size(); k += 2) {
      if (poly->coeffs[k] != 0.0) return false;
    }
  }
  return true;
}

void Potential::check_domain(double x) const {
  if (!std::isfinite(x)) fail(ErrorCode::DomainError, "position must be finite");
  if (std::holds_alternative<CalogeroMoser>(kind_) && std::fabs(x) < kCalogeroMoserGuard) {
    fail(ErrorCode::DomainError, "Calogero-Moser potential is singular at x = " + std::to_string(x));
  }
}

double Potential::derivative(double x) const {
  check_domain(x);
  return std::visit(Overloaded{
                        [](const Free&) { return 0.0; },
                        [x](const Harmonic& h) { return h.mass * h.omega * h.omega * x; },
                        [x](const PairHarmonic& p) { return 2.0 * p.g * p.g * x; },
                        [x](const CalogeroMoser& cm) { return -2.0 * cm.g * cm.g / (x * x * x); },
                        [x](const Polynomial& poly) {
                          double sum = 0.0;
                          for (std::size_t k = poly.coeffs.size(); k-- > 1;) {
                            sum = sum * x + static_cast<double>(k) * poly.coeffs[k];
                          }
                          return sum;
                        },
                    },
                    kind_);
}

double eval_V(const Potential& pot, double x) { return pot.value(x); }

double eval_dV(const Potential& pot, double x) { return pot.derivative(x); }

}  // namespace multlag
