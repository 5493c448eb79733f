#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "multlag/potentials.hpp"

namespace multlag {

enum class Family {
  AdditiveNR,
  MultiplicativeNR,
  HierarchyNR,
  AdditiveRel,
  MultiplicativeRel,
  HierarchyRel,
};

inline constexpr Family kAllFamilies[] = {Family::AdditiveNR,  Family::MultiplicativeNR, Family::HierarchyNR,
                                          Family::AdditiveRel, Family::MultiplicativeRel, Family::HierarchyRel};

constexpr bool is_relativistic(Family f) {
  return f == Family::AdditiveRel || f == Family::MultiplicativeRel || f == Family::HierarchyRel;
}
constexpr bool is_hierarchy(Family f) { return f == Family::HierarchyNR || f == Family::HierarchyRel; }
constexpr bool is_multiplicative(Family f) {
  return f == Family::MultiplicativeNR || f == Family::MultiplicativeRel;
}

/// Short names used by the command line: add-nr, mult-nr, hier-nr, add-rel, ...
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Physical parameters shared by all families. c is ignored by the
/// non-relativistic ones, lambda by the additive and hierarchy ones.
struct ModelParams {
  double mass = 1.0;
  double lambda = 1.0;
  double c = 1.0;

  void validate() const;
};

/// A Lagrangian or Hamiltonian family with its parameters and potential.
/// order is the hierarchy index j and is only read by hierarchy families.
struct Model {
  Family family = Family::AdditiveNR;
  int order = 1;
  ModelParams params;
  Potential potential;

  void validate() const;
  std::string describe() const;
};

}  // namespace multlag
