#include <cmath>

#include "hyperflower/simd/edge_kernels.hpp"
#include "kernels.hpp"

namespace hyperflower::simd::detail {

std::size_t edge_terms_scalar(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t begin, std::size_t end, double target, double* residual,
                              double* fx, double* fy, double* fz) {
  std::size_t degenerate = kNoDegenerateEdge;
  for (std::size_t e = begin; e < end; ++e) {
    const Vec3& pa = p[a[e]];
    const Vec3& pb = p[b[e]];
    const double dx = pa.x - pb.x;
    const double dy = pa.y - pb.y;
    const double dz = pa.z - pb.z;
    const double len = std::sqrt((dx * dx + dy * dy) + dz * dz);
    const double res = len - target;
    const double c = (2.0 * res) / len;
    residual[e] = res;
    fx[e] = c * dx;
    fy[e] = c * dy;
    fz[e] = c * dz;
    if (len <= kDegenerateLength && degenerate == kNoDegenerateEdge) degenerate = e;
  }
  return degenerate;
}

double max_abs_scalar(const double* v, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(v[i]));
  return m;
}

}  // namespace hyperflower::simd::detail
