#include <cmath>

#include "flowers/simd/weighted_sum.hpp"

namespace flowers::simd {

void weighted_sum_scalar(const double* const* rows, const double* coeffs, std::size_t features, std::size_t n,
                         double* out) {
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t f = 0; f < features; ++f) acc = std::fma(coeffs[f], rows[f][j], acc);
    out[j] = acc;
  }
}

}  // namespace flowers::simd
