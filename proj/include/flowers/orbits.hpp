#pragma once

// Periodic orbits of E_d as exact point sets, interlacing numbers for the
// doubling map, and critical points of finite invariant sets.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "flowers/exact.hpp"
#include "flowers/symbolic.hpp"

namespace flowers {

struct PeriodicOrbit {
  Word word;
  /// Dynamical order: points[i + 1] = E_d(points[i]), points[0] codes `word`.
  std::vector<CirclePoint> points;
  int d = 2;

  std::size_t period() const { return word.size(); }
  /// The words "0" and "1" (d = 2) both give the fixed point 0.
  bool is_fixed_point() const { return points.size() == 1 && points.front().value().is_zero(); }
};

/// The orbit whose E_d-itinerary is the cyclic word w:
/// points[0] = k / (d^p - 1) mod 1 with k = w read in base d.
PeriodicOrbit orbit_from_word(const Word& w, int d);

/// All orbits keyed by Lyndon words of length <= max_period, in
/// (period, lexicographic) order.
std::vector<PeriodicOrbit> enumerate_orbits(int d, int max_period);

/// Number of maximal circular blocks of orbit points among orbit U antiorbit.
/// Defined for d = 2 only; always odd.
int interlacing_number(const PeriodicOrbit& orbit);

struct TallyEntry {
  std::size_t count = 0;
  Word simplest;
};

/// interlacing number -> (count, simplest orbit word). "Simplest" means
/// shortest period, then lexicographically first.
std::map<int, TallyEntry> interlacing_tally(int max_period);

/// Points of K with more than one E_d-preimage in K. Throws ValidationError
/// if K is not forward invariant.
std::vector<CirclePoint> critical_points(std::span<const CirclePoint> K, int d);

/// Throws ValidationError unless E_d(K) is contained in K.
void require_forward_invariant(std::span<const CirclePoint> K, int d);

}  // namespace flowers
