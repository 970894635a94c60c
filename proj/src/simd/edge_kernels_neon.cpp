#include <arm_neon.h>

#include <algorithm>

#include "hyperflower/simd/edge_kernels.hpp"
#include "kernels.hpp"

namespace hyperflower::simd::detail {
namespace {

float64x2_t pair(double lo, double hi) { return vcombine_f64(vdup_n_f64(lo), vdup_n_f64(hi)); }

}  // namespace

std::size_t edge_terms_neon(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n, double target, double* residual, double* fx, double* fy,
                            double* fz) {
  const float64x2_t vtarget = vdupq_n_f64(target);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t tiny = vdupq_n_f64(kDegenerateLength);
  std::size_t degenerate = kNoDegenerateEdge;

  std::size_t e = 0;
  for (; e + 2 <= n; e += 2) {
    const Vec3& a0 = p[a[e]];
    const Vec3& a1 = p[a[e + 1]];
    const Vec3& b0 = p[b[e]];
    const Vec3& b1 = p[b[e + 1]];
    const float64x2_t dx = vsubq_f64(pair(a0.x, a1.x), pair(b0.x, b1.x));
    const float64x2_t dy = vsubq_f64(pair(a0.y, a1.y), pair(b0.y, b1.y));
    const float64x2_t dz = vsubq_f64(pair(a0.z, a1.z), pair(b0.z, b1.z));
    // Separate multiply and add; vfmaq would round differently from the scalar path.
    const float64x2_t sq = vaddq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)),
                                     vmulq_f64(dz, dz));
    const float64x2_t len = vsqrtq_f64(sq);
    const float64x2_t res = vsubq_f64(len, vtarget);
    const float64x2_t c = vdivq_f64(vmulq_f64(two, res), len);
    vst1q_f64(residual + e, res);
    vst1q_f64(fx + e, vmulq_f64(c, dx));
    vst1q_f64(fy + e, vmulq_f64(c, dy));
    vst1q_f64(fz + e, vmulq_f64(c, dz));

    const uint64x2_t le = vcleq_f64(len, tiny);
    if (degenerate == kNoDegenerateEdge) {
      if (vgetq_lane_u64(le, 0) != 0) {
        degenerate = e;
      } else if (vgetq_lane_u64(le, 1) != 0) {
        degenerate = e + 1;
      }
    }
  }
  const std::size_t tail = edge_terms_scalar(p, a, b, e, n, target, residual, fx, fy, fz);
  return std::min(degenerate, tail);
}

double max_abs_neon(const double* v, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(v + i)));
  const double out = std::max(vgetq_lane_f64(m, 0), vgetq_lane_f64(m, 1));
  return std::max(out, max_abs_scalar(v + i, n - i));
}

}  // namespace hyperflower::simd::detail
