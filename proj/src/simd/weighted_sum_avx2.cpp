#include <immintrin.h>

#include <cmath>

#include "flowers/simd/weighted_sum.hpp"

namespace flowers::simd {

void weighted_sum_avx2(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                       double* out) {
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256d lo = _mm256_setzero_pd();
    __m256d hi = _mm256_setzero_pd();
    for (std::size_t f = 0; f < features; ++f) {
      const __m256d c = _mm256_set1_pd(coeffs[f]);
      lo = _mm256_fmadd_pd(c, _mm256_loadu_pd(rows[f] + j), lo);
      hi = _mm256_fmadd_pd(c, _mm256_loadu_pd(rows[f] + j + 4), hi);
    }
    _mm256_storeu_pd(out + j, lo);
    _mm256_storeu_pd(out + j + 4, hi);
  }
  for (; j + 4 <= n; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t f = 0; f < features; ++f) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[f]), _mm256_loadu_pd(rows[f] + j), acc);
    }
    _mm256_storeu_pd(out + j, acc);
  }
  for (; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t f = 0; f < features; ++f) acc = std::fma(coeffs[f], rows[f][j], acc);
    out[j] = acc;
  }
}

}  // namespace flowers::simd
