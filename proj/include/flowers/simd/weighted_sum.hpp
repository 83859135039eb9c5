#pragma once

// out[j] = sum_f coeffs[f] * rows[f][j], accumulated in feature order with a
// fused multiply-add per term. Every variant produces bitwise-identical
// results to the scalar reference.

#include <cstddef>
#include <string>

namespace flowers::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string to_string(Isa isa);

/// Whether the variant was compiled in and the CPU supports it.
bool available(Isa isa);

/// Best available variant, unless FLOWER_IET_SIMD=scalar|avx2|neon selects
/// another available one.
Isa active();

void weighted_sum_scalar(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                         double* out);
void weighted_sum_avx2(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                       double* out);
void weighted_sum_neon(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                       double* out);

/// Throws std::invalid_argument if `isa` is not available.
void weighted_sum(Isa isa, const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                  double* out);

inline void weighted_sum(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                         double* out) {
  weighted_sum(active(), rows, coeffs, features, n, out);
}

}  // namespace flowers::simd
