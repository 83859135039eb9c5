#pragma once

// Flowers for E_d: finite unions of closed arcs F whose translates
// F + i/d tile the circle with disjoint interiors.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flowers/exact.hpp"
#include "flowers/orbits.hpp"

namespace flowers {

/// Closed counterclockwise arc from left to right; may wrap through 0.
/// left == right denotes a single point.
struct Arc {
  CirclePoint left;
  CirclePoint right;

  Rational length() const { return forward_distance(left, right); }
  bool is_point() const { return left == right; }
  bool wraps() const { return right < left; }

  bool contains(const CirclePoint& x) const { return forward_distance(left, x) <= length(); }
  bool contains_interior(const CirclePoint& x) const {
    const Rational t = forward_distance(left, x);
    return t.sign() > 0 && t < length();
  }
  /// [left, right): the right-continuous half-open version of the arc.
  bool contains_half_open(const CirclePoint& x) const { return forward_distance(left, x) < length(); }

  friend bool operator==(const Arc&, const Arc&) = default;
};

class Flower {
 public:
  /// Petals are stored sorted by left endpoint. No validation happens here;
  /// use validate_flower.
  Flower(std::vector<Arc> petals, int d);

  const std::vector<Arc>& petals() const { return petals_; }
  int d() const { return d_; }
  std::size_t size() const { return petals_.size(); }

  Rational total_length() const;
  bool contains(const CirclePoint& x) const;
  bool contains_interior(const CirclePoint& x) const;
  /// Index of a petal whose closed arc contains x.
  std::optional<std::size_t> petal_of(const CirclePoint& x) const;

  friend bool operator==(const Flower&, const Flower&) = default;

 private:
  std::vector<Arc> petals_;
  int d_;
};

struct FlowerViolation {
  enum class Kind {
    BadDegree,
    NoPetals,
    DegeneratePetal,
    Overlap,
    WrongMeasure,
    NotCovering,
    TranslateInteriorIntersection,
    AntipodalMismatch,
    EvenPetalCount,
  };
  Kind kind;
  std::string detail;
};

std::string to_string(FlowerViolation::Kind kind);

/// Empty result means the flower axioms hold exactly.
std::vector<FlowerViolation> validate_flower(const Flower& flower);

/// Throws ValidationError listing every violation.
void require_valid_flower(const Flower& flower);

/// The preimage of x selected by the right-continuous preimage selector
/// whose image closure is the flower.
CirclePoint preimage_select(const Flower& flower, const CirclePoint& x);

/// F n E^-1(F) n ... n E^-k(F) as a sorted list of closed arcs; isolated
/// points appear as point arcs.
std::vector<Arc> maximal_invariant_approx(const Flower& flower, int k);

/// Canonical flower around a periodic orbit of E_2: one petal per orbit
/// block, cut at the midpoints of the orbit/antiorbit gaps.
Flower flower_from_orbit(const PeriodicOrbit& orbit);

/// Number of d-adic intervals [j/d^n, (j+1)/d^n) meeting Y. Y must be
/// forward invariant.
std::size_t complexity_adic(std::span<const CirclePoint> Y, int d, int n);

/// Convex hull of a finite piece of an invariant set: the arc from lo of
/// the given length.
struct HullSpan {
  CirclePoint lo;
  Rational length;

  CirclePoint hi() const { return lo + length; }
};

/// Builds a flower for E_2 from the first half of a cyclic hull sequence.
///
/// `half` holds p (odd) hulls in counterclockwise order alternating
/// petal hull, antipodal hull, petal hull, ...; the full cyclic sequence is
/// `half` followed by `half` shifted by 1/2. Consecutive hulls may touch but
/// not overlap. Every gap is cut at its midpoint. Throws ConsistencyError on
/// overlap or on a petal collapsing to a point.
Flower flower_from_hull_sequence(std::span<const HullSpan> half);

}  // namespace flowers
