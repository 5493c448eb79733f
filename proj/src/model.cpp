#include "multlag/model.hpp"

#include <cmath>

#include "multlag/error.hpp"

namespace multlag {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::AdditiveNR: return "add-nr";
    case Family::MultiplicativeNR: return "mult-nr";
    case Family::HierarchyNR: return "hier-nr";
    case Family::AdditiveRel: return "add-rel";
    case Family::MultiplicativeRel: return "mult-rel";
    case Family::HierarchyRel: return "hier-rel";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

void ModelParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) fail(ErrorCode::InvalidArgument, "mass must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorCode::NonPositiveLambda, "lambda must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorCode::InvalidArgument, "c must be positive");
}

void Model::validate() const {
  params.validate();
  if (is_hierarchy(family) && order < 1) fail(ErrorCode::InvalidArgument, "hierarchy order j must be >= 1");
}

std::string Model::describe() const {
  std::string out(family_name(family));
  if (is_hierarchy(family)) out += " j=" + std::to_string(order);
  out += " " + potential.name();
  return out;
}

}  // namespace multlag
