#include <arm_neon.h>

#include <cmath>

#include "flowers/simd/weighted_sum.hpp"

namespace flowers::simd {

void weighted_sum_neon(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                       double* out) {
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t f = 0; f < features; ++f) acc = vfmaq_n_f64(acc, vld1q_f64(rows[f] + j), coeffs[f]);
    vst1q_f64(out + j, acc);
  }
  for (; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t f = 0; f < features; ++f) acc = std::fma(coeffs[f], rows[f][j], acc);
    out[j] = acc;
  }
}

}  // namespace flowers::simd
