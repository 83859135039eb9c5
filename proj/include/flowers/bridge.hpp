#pragma once

// From a flower carrying a periodic orbit to a deck shuffler: the CDF of the
// orbit's invariant measure conjugates E_2 on the orbit to the shuffler.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowers/exact.hpp"
#include "flowers/flower.hpp"
#include "flowers/iet.hpp"
#include "flowers/orbits.hpp"

namespace flowers {

/// Uniform probability measure on a periodic orbit.
struct OrbitMeasure {
  PeriodicOrbit orbit;

  static OrbitMeasure uniform(PeriodicOrbit orbit);
  Rational weight() const { return Rational(1, static_cast<long>(orbit.points.size())); }
};

class CdfMap {
 public:
  const Flower& flower() const { return flower_; }
  /// Orbit points in increasing order with h(x) = mu([0, x]).
  const std::vector<std::pair<CirclePoint, Rational>>& support() const { return support_; }
  /// Petal endpoints (left, right per petal) with their h values.
  const std::vector<std::pair<CirclePoint, Rational>>& endpoints() const { return endpoints_; }

  /// mu([0, x]); right-continuous.
  Rational h(const CirclePoint& x) const;
  /// mu([0, x)); at an atom x the measure occupies [h_left(x), h(x)).
  Rational h_left(const CirclePoint& x) const;
  /// mu of the closed petal.
  Rational mass(const Arc& petal) const;

 private:
  friend CdfMap cdf(const OrbitMeasure& mu, const Flower& F);
  CdfMap(Flower flower, Rational weight) : flower_(std::move(flower)), weight_(std::move(weight)) {}

  Flower flower_;
  Rational weight_;
  std::vector<std::pair<CirclePoint, Rational>> support_;
  std::vector<std::pair<CirclePoint, Rational>> endpoints_;
};

/// Throws ValidationError if F is not a valid flower for E_2, contains 0,
/// has an orbit point outside the petal interiors, or has a petal without
/// mass (such a petal can be removed).
CdfMap cdf(const OrbitMeasure& mu, const Flower& F);

/// The 2m-interval deck shuffler with lengths mu(P_1), ..., mu(P_{m-1}),
/// mu(P_m n [0, 1/2)), mu(P_m n [1/2, 1)), mu(P_{m+1}), ..., mu(P_{2m-1}),
/// petals numbered counterclockwise from 0. P_m must contain 1/2 and both of
/// its halves must carry mass.
DeckShuffler iet_from_flower(const OrbitMeasure& mu, const Flower& F);

struct RoundTripReport {
  Word word{{0}, 2};
  int interlacing = 0;
  Flower flower{{}, 2};
  std::vector<Rational> lengths;
  bool conjugacy = false;
  bool inverse_coding = false;
  bool flower_containment = false;
  /// One line per failed check, with exact witnesses.
  std::vector<std::string> failures;

  bool ok() const { return conjugacy && inverse_coding && flower_containment; }
};

/// Canonical flower -> deck shuffler -> coding, checked exactly on the
/// orbit: T(h_left(x)) = h_left(E_2 x) with the atom of x inside a single
/// interval, H(h_left(x)) = x, and every orbit point lies in
/// flower_from_iet(T). Throws ValidationError for the fixed point.
RoundTripReport round_trip(const PeriodicOrbit& orbit);

/// round_trip over many orbits on `threads` workers; results in input order.
std::vector<RoundTripReport> round_trip_batch(std::span<const PeriodicOrbit> orbits, unsigned threads);

}  // namespace flowers
