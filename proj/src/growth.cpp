#include "hyperflower/growth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperflower/error.hpp"
#include "hyperflower/tiling.hpp"

namespace hyperflower {
namespace {

void require_radius(double r, const char* what) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError(std::string(what) + ": radius must be finite and >= 0");
  }
}

}  // namespace

double circumference_euclidean(double r) {
  require_radius(r, "circumference_euclidean");
  return 2.0 * std::numbers::pi * r;
}

double circumference_hyperbolic(double r) {
  require_radius(r, "circumference_hyperbolic");
  return 2.0 * std::numbers::pi * std::sinh(r);
}

double circumference_ratio(double r) {
  require_radius(r, "circumference_ratio");
  return r == 0.0 ? 1.0 : std::sinh(r) / r;
}

GrowthTable growth_table(double r_max, int steps) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw DomainError("growth_table: r_max must be finite and > 0");
  }
  if (steps < 2) throw DomainError("growth_table: steps must be >= 2");
  GrowthTable table;
  table.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double r = i == steps - 1 ? r_max : r_max * i / (steps - 1);
    table.push_back({r, circumference_euclidean(r), circumference_hyperbolic(r),
                     circumference_ratio(r)});
  }
  return table;
}

double triangle_height(int k) {
  // Right triangle formed by the altitude: hypotenuse a, angle alpha at the
  // base corner, so sinh h = sinh a * sin alpha.
  const double a = edge_length(k);
  return std::asinh(std::sinh(a) * std::sin(2.0 * std::numbers::pi / k));
}

}  // namespace hyperflower
