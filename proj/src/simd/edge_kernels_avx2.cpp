// Compiled with -mavx2 (no FMA, so products and sums round exactly like the
// scalar reference).

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "hyperflower/simd/edge_kernels.hpp"
#include "kernels.hpp"

namespace hyperflower::simd::detail {

std::size_t edge_terms_avx2(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n, double target, double* residual, double* fx, double* fy,
                            double* fz) {
  const double* base = &p[0].x;
  const __m256d vtarget = _mm256_set1_pd(target);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d tiny = _mm256_set1_pd(kDegenerateLength);
  std::size_t degenerate = kNoDegenerateEdge;

  std::size_t e = 0;
  for (; e + 4 <= n; e += 4) {
    // Vec3 is three packed doubles: coordinate c of vertex i sits at base[3 i + c].
    __m128i ia = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + e));
    __m128i ib = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + e));
    ia = _mm_add_epi32(_mm_slli_epi32(ia, 1), ia);
    ib = _mm_add_epi32(_mm_slli_epi32(ib, 1), ib);

    const __m256d dx =
        _mm256_sub_pd(_mm256_i32gather_pd(base, ia, 8), _mm256_i32gather_pd(base, ib, 8));
    const __m256d dy =
        _mm256_sub_pd(_mm256_i32gather_pd(base + 1, ia, 8), _mm256_i32gather_pd(base + 1, ib, 8));
    const __m256d dz =
        _mm256_sub_pd(_mm256_i32gather_pd(base + 2, ia, 8), _mm256_i32gather_pd(base + 2, ib, 8));

    const __m256d sq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                     _mm256_mul_pd(dz, dz));
    const __m256d len = _mm256_sqrt_pd(sq);
    const __m256d res = _mm256_sub_pd(len, vtarget);
    const __m256d c = _mm256_div_pd(_mm256_mul_pd(two, res), len);

    _mm256_storeu_pd(residual + e, res);
    _mm256_storeu_pd(fx + e, _mm256_mul_pd(c, dx));
    _mm256_storeu_pd(fy + e, _mm256_mul_pd(c, dy));
    _mm256_storeu_pd(fz + e, _mm256_mul_pd(c, dz));

    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(len, tiny, _CMP_LE_OQ));
    if (mask != 0 && degenerate == kNoDegenerateEdge) {
      degenerate = e + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
    }
  }
  const std::size_t tail = edge_terms_scalar(p, a, b, e, n, target, residual, fx, fy, fz);
  return std::min(degenerate, tail);
}

double max_abs_avx2(const double* v, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(v + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  return std::max(out, max_abs_scalar(v + i, n - i));
}

}  // namespace hyperflower::simd::detail
