#include <cstdlib>
#include <string>

#include "hyperflower/error.hpp"
#include "hyperflower/simd/edge_kernels.hpp"
#include "kernels.hpp"

namespace hyperflower::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(HYPERFLOWER_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(HYPERFLOWER_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("HYPERFLOWER_ISA")) {
      const std::string_view want(env);
      for (const Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (want == to_string(isa) && isa_available(isa)) return isa;
      }
    }
    return best_isa();
  }();
  return chosen;
}

std::size_t edge_terms(Isa isa, std::span<const Vec3> positions,
                       std::span<const std::uint32_t> first, std::span<const std::uint32_t> second,
                       double target, EdgeTerms& out) {
  if (first.size() != second.size()) throw DomainError("edge_terms: endpoint lists differ in size");
  if (!isa_available(isa)) {
    throw DomainError("edge_terms: instruction set " + std::string(to_string(isa)) +
                      " is not available");
  }
  const std::size_t n = first.size();
  out.resize(n);
  if (n == 0) return kNoDegenerateEdge;
  const Vec3* p = positions.data();
  switch (isa) {
#if defined(HYPERFLOWER_HAVE_AVX2)
    case Isa::Avx2:
      return detail::edge_terms_avx2(p, first.data(), second.data(), n, target,
                                     out.residual.data(), out.fx.data(), out.fy.data(),
                                     out.fz.data());
#endif
#if defined(HYPERFLOWER_HAVE_NEON)
    case Isa::Neon:
      return detail::edge_terms_neon(p, first.data(), second.data(), n, target,
                                     out.residual.data(), out.fx.data(), out.fy.data(),
                                     out.fz.data());
#endif
    default:
      return detail::edge_terms_scalar(p, first.data(), second.data(), 0, n, target,
                                       out.residual.data(), out.fx.data(), out.fy.data(),
                                       out.fz.data());
  }
}

double max_abs(Isa isa, std::span<const double> values) {
  if (!isa_available(isa)) {
    throw DomainError("max_abs: instruction set " + std::string(to_string(isa)) +
                      " is not available");
  }
  switch (isa) {
#if defined(HYPERFLOWER_HAVE_AVX2)
    case Isa::Avx2: return detail::max_abs_avx2(values.data(), values.size());
#endif
#if defined(HYPERFLOWER_HAVE_NEON)
    case Isa::Neon: return detail::max_abs_neon(values.data(), values.size());
#endif
    default: return detail::max_abs_scalar(values.data(), values.size());
  }
}

}  // namespace hyperflower::simd
