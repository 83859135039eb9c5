#pragma once

// Trigonometric observables on the circle, their integrals against periodic
// orbit measures of the doubling map, and the seeded maximizer experiment.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "flowers/exact.hpp"
#include "flowers/orbits.hpp"
#include "flowers/simd/weighted_sum.hpp"

namespace flowers {

/// f(x) = sum_k a_k cos(2 pi k x) + b_k sin(2 pi k x), k >= 1.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(std::initializer_list<std::pair<const int, std::pair<double, double>>> terms);

  /// Adds to the coefficients at frequency k >= 1.
  void add(int k, double a, double b);
  const std::map<int, std::pair<double, double>>& terms() const { return terms_; }
  int max_frequency() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  double operator()(double x) const;
  /// Evaluates with the phase k x reduced mod 1 exactly.
  double operator()(const CirclePoint& x) const;

  TrigPoly scaled(double c) const;

 private:
  std::map<int, std::pair<double, double>> terms_;
};

double eval(const TrigPoly& f, const CirclePoint& x);

/// Moves every even frequency 2k to k (repeatedly) summing collisions;
/// cohomologous to f under E_2.
TrigPoly reduce_to_odd(const TrigPoly& f);

/// Mean of f over the orbit points.
double integrate_orbit(const TrigPoly& f, const PeriodicOrbit& orbit);

/// All orbits up to max_period with their orbit averages of cos(2 pi k x)
/// and sin(2 pi k x), k = 1..max_frequency, stored feature-major.
class OrbitCatalog {
 public:
  OrbitCatalog(int max_period, int max_frequency);

  std::size_t size() const { return words_.size(); }
  int max_period() const { return max_period_; }
  int max_frequency() const { return max_frequency_; }
  const Word& word(std::size_t i) const { return words_[i]; }
  int interlacing(std::size_t i) const { return interlacing_[i]; }

  /// Row of orbit averages of cos (sine = false) or sin of frequency k.
  const double* moments(int k, bool sine) const;

  /// Integral of f against every orbit measure, in catalog order.
  void integrals(const TrigPoly& f, std::vector<double>& out, simd::Isa isa) const;
  void integrals(const TrigPoly& f, std::vector<double>& out) const { integrals(f, out, simd::active()); }

 private:
  int max_period_;
  int max_frequency_;
  std::vector<Word> words_;
  std::vector<int> interlacing_;
  std::vector<double> table_;  // (2 * (k - 1) + sine) * size() + orbit
};

/// Orbits whose integral is within this of the maximum count as tied.
inline constexpr double kTieTolerance = 1e-12;

struct Maximizer {
  std::size_t index = 0;
  Word word{{0}, 2};
  double value = 0.0;
  int interlacing = 0;
  /// Another orbit came within kTieTolerance of the maximum.
  bool tie = false;
};

/// First orbit in (period, lexicographic) order whose integral is within
/// kTieTolerance of the largest one.
Maximizer pseudo_maximizer(const OrbitCatalog& catalog, const TrigPoly& f);
Maximizer pseudo_maximizer(const TrigPoly& f, int max_period);

/// Sample i of a run seeded with `seed` draws from this generator.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform point of the unit sphere in the coefficients
/// (a_1, b_1, a_3, b_3, ..., a_degree, b_degree) of odd frequencies.
TrigPoly sample_sphere(int degree, std::mt19937_64& rng);

struct ExperimentConfig {
  int degree = 3;
  std::size_t samples = 1000;
  int max_period = 14;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

struct SampleRecord {
  std::size_t id = 0;
  TrigPoly f;
  Maximizer maximizer;
};

struct ExperimentResult {
  ExperimentConfig config;
  /// interlacing number -> number of samples whose maximizer has it
  std::map<int, std::size_t> tally;
  std::vector<SampleRecord> samples;
};

/// Throws ValidationError for an even or non-positive degree or zero samples.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Columns sample_id, a1, b1, a3, b3, ..., argmax_word, integral,
/// interlacing, tie.
void write_experiment_csv(std::ostream& os, const ExperimentResult& result);

}  // namespace flowers
