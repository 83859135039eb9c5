#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "flowers/ergopt.hpp"
#include "flowers/simd/weighted_sum.hpp"

using namespace flowers;
using flowers::simd::Isa;

namespace {

std::vector<Isa> variants() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (simd::available(isa)) out.push_back(isa);
  }
  return out;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Simd, ScalarAlwaysAvailable) {
  EXPECT_TRUE(simd::available(Isa::Scalar));
  EXPECT_TRUE(simd::available(simd::active()));
  RecordProperty("active_isa", simd::to_string(simd::active()));
}

TEST(Simd, VariantsMatchScalarBitwise) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 37u, 1000u}) {
    for (std::size_t features : {0u, 1u, 2u, 6u, 11u}) {
      std::vector<std::vector<double>> data(features, std::vector<double>(n));
      std::vector<const double*> rows;
      std::vector<double> coeffs;
      for (auto& row : data) {
        for (double& x : row) x = u(rng) * 1e3;
        rows.push_back(row.data());
        coeffs.push_back(u(rng));
      }
      std::vector<double> ref(n, -1.0);
      simd::weighted_sum_scalar(rows.data(), coeffs.data(), features, n, ref.data());
      for (Isa isa : variants()) {
        std::vector<double> got(n, -2.0);
        simd::weighted_sum(isa, rows.data(), coeffs.data(), features, n, got.data());
        EXPECT_TRUE(bitwise_equal(ref, got)) << simd::to_string(isa) << " n=" << n << " f=" << features;
      }
    }
  }
}

TEST(Simd, CatalogIntegralsMatchScalarBitwise) {
  const OrbitCatalog cat(14, 5);
  auto rng = sample_stream(5, 0);
  for (int t = 0; t < 20; ++t) {
    const TrigPoly f = sample_sphere(5, rng);
    std::vector<double> ref;
    cat.integrals(f, ref, Isa::Scalar);
    for (Isa isa : variants()) {
      std::vector<double> got;
      cat.integrals(f, got, isa);
      EXPECT_TRUE(bitwise_equal(ref, got)) << simd::to_string(isa);
    }
  }
}

TEST(Simd, UnavailableVariantThrows) {
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (simd::available(isa)) continue;
    double out = 0.0;
    EXPECT_THROW(simd::weighted_sum(isa, nullptr, nullptr, 0, 0, &out), std::invalid_argument);
  }
}
