#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "flowers/simd/weighted_sum.hpp"

namespace flowers::simd {

#if !defined(FLOWERS_HAVE_AVX2)
void weighted_sum_avx2(const double* const*, const double*, std::size_t, std::size_t, double*) {
  throw std::invalid_argument("AVX2 kernel not compiled in");
}
#endif

#if !defined(FLOWERS_HAVE_NEON)
void weighted_sum_neon(const double* const*, const double*, std::size_t, std::size_t, double*) {
  throw std::invalid_argument("NEON kernel not compiled in");
}
#endif

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(FLOWERS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(FLOWERS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("FLOWER_IET_SIMD")) {
    const std::string_view want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa) && available(isa)) return isa;
    }
  }
  if (available(Isa::Avx2)) return Isa::Avx2;
  if (available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

}  // namespace

Isa active() {
  static const Isa isa = detect();
  return isa;
}

void weighted_sum(Isa isa, const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                  double* out) {
  if (!available(isa)) throw std::invalid_argument(to_string(isa) + " kernel is not available on this machine");
  switch (isa) {
    case Isa::Scalar: weighted_sum_scalar(rows, coeffs, features, n, out); return;
    case Isa::Avx2: weighted_sum_avx2(rows, coeffs, features, n, out); return;
    case Isa::Neon: weighted_sum_neon(rows, coeffs, features, n, out); return;
  }
}

}  // namespace flowers::simd
