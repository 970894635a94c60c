#pragma once

#include <cstddef>
#include <cstdint>

#include "hyperflower/vec3.hpp"

namespace hyperflower::simd::detail {

// Raw kernels over [begin, end). Return the first degenerate edge index or
// kNoDegenerateEdge.
std::size_t edge_terms_scalar(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t begin, std::size_t end, double target, double* residual,
                              double* fx, double* fy, double* fz);
double max_abs_scalar(const double* v, std::size_t n);

#if defined(HYPERFLOWER_HAVE_AVX2)
std::size_t edge_terms_avx2(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n, double target, double* residual, double* fx, double* fy,
                            double* fz);
double max_abs_avx2(const double* v, std::size_t n);
#endif

#if defined(HYPERFLOWER_HAVE_NEON)
std::size_t edge_terms_neon(const Vec3* p, const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n, double target, double* residual, double* fx, double* fy,
                            double* fz);
double max_abs_neon(const double* v, std::size_t n);
#endif

}  // namespace hyperflower::simd::detail
