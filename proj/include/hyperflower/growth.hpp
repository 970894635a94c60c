#pragma once

#include <vector>

namespace hyperflower {

/// 2*pi*r.
double circumference_euclidean(double r);

/// 2*pi*sinh(r), the circumference of a hyperbolic circle of radius r.
double circumference_hyperbolic(double r);

/// sinh(r)/r, continuously extended by 1 at r = 0.
double circumference_ratio(double r);

struct GrowthRow {
  double r = 0.0;
  double c_euclidean = 0.0;
  double c_hyperbolic = 0.0;
  double ratio = 1.0;
};

using GrowthTable = std::vector<GrowthRow>;

/// `steps` equally spaced radii from 0 to r_max inclusive.
GrowthTable growth_table(double r_max, int steps);

/// Intrinsic height of one tile of the {3,k} tiling, used to turn a
/// combinatorial layer count into an approximate radius.
double triangle_height(int k);

}  // namespace hyperflower
