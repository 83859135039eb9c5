#pragma once

// Interval exchange transformations and deck shufflers.
//
// Two scalar modes are supported:
//   * Rational - exact. Every orbit of a rational IET is periodic inside the
//     finite set x + (1/q)Z, so codings are detected as exact cycles.
//   * Real     - bounded precision (binary floating point, ~166 bits).
//     Codings are truncated at a requested depth N and carry the error bound
//     2^-N.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowers/exact.hpp"
#include "flowers/flower.hpp"
#include "flowers/symbolic.hpp"

namespace flowers {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& r);
/// Exact conversion: every finite binary float is a dyadic rational.
Rational to_rational(const Real& x);
inline Rational to_rational(const Rational& x) { return x; }

/// Default truncation depth of bounded-precision codings.
inline constexpr int kDefaultDepth = 64;

/// Which one-sided limit a coding follows at a discontinuity. Left codes
/// the virtual point x- (intervals taken as (start, end]); x may then be 1.
enum class Side { Right, Left };

template <class S>
class BasicIet {
 public:
  /// `permutation[k]` is the 1-based position of interval k+1 after the
  /// exchange. Lengths must be positive and sum to 1 (exactly for Rational,
  /// within 1e-40 for Real).
  BasicIet(std::vector<S> lengths, std::vector<int> permutation);

  const std::vector<S>& lengths() const { return lengths_; }
  const std::vector<int>& permutation() const { return permutation_; }
  std::size_t size() const { return lengths_.size(); }

  /// Left endpoint of interval k (0-based); start(size()) == 1.
  const S& start(std::size_t k) const { return starts_[k]; }
  /// Translation applied on interval k.
  const S& translation(std::size_t k) const { return translations_[k]; }

  /// 0-based index of the interval containing x (intervals left-closed).
  std::size_t interval_of(const S& x, Side side = Side::Right) const;

  S apply(const S& x, Side side = Side::Right) const { return x + translations_[interval_of(x, side)]; }

 private:
  std::vector<S> lengths_;
  std::vector<int> permutation_;
  std::vector<S> starts_;
  std::vector<S> translations_;
};

using Iet = BasicIet<Rational>;
using RealIet = BasicIet<Real>;

/// 2m-interval exchange with intervals A_1 < ... < A_m < B_1 < ... < B_m
/// and image order T(B_1) < T(A_1) < T(B_2) < ... < T(B_m) < T(A_m).
template <class S>
class BasicDeckShuffler {
 public:
  /// Throws ValidationError on odd count, non-positive length or bad sum.
  explicit BasicDeckShuffler(std::vector<S> lengths);

  std::size_t m() const { return m_; }
  const BasicIet<S>& iet() const { return iet_; }
  const std::vector<S>& lengths() const { return iet_.lengths(); }

  S apply(const S& x, Side side = Side::Right) const { return iet_.apply(x, side); }
  /// The piecewise form x + |B_1| + ... + |B_i| on A_i and
  /// x - |A_i| - ... - |A_m| on B_i; used as an independent oracle.
  S apply_explicit(const S& x) const;

  bool in_b(const S& x, Side side = Side::Right) const { return iet_.interval_of(x, side) >= m_; }

  /// Endpoints of A_i and B_i (1-based i) as [lo, hi).
  S a_lo(std::size_t i) const { return iet_.start(i - 1); }
  S a_hi(std::size_t i) const { return iet_.start(i); }
  S b_lo(std::size_t i) const { return iet_.start(m_ + i - 1); }
  S b_hi(std::size_t i) const { return iet_.start(m_ + i); }

 private:
  std::size_t m_;
  BasicIet<S> iet_;
};

using DeckShuffler = BasicDeckShuffler<Rational>;
using RealDeckShuffler = BasicDeckShuffler<Real>;

/// The deck-shuffler permutation (interval -> 1-based image position) on 2m
/// intervals: A_i -> 2i, B_i -> 2i - 1.
std::vector<int> deck_shuffler_permutation(std::size_t m);

DeckShuffler deck_shuffler(std::vector<Rational> lengths);

template <class S>
bool is_irreducible(const BasicIet<S>& T);

template <class S>
struct KeaneResult {
  enum class Status {
    Satisfied,  ///< proved: no interior endpoint orbit can hit an endpoint
    Violation,  ///< an endpoint orbit hit an endpoint
    Undecided,  ///< no hit up to the horizon (bounded-precision mode)
  };
  Status status = Status::Undecided;
  /// 1-based index k of the tracked endpoint start(k) and of the endpoint hit.
  std::size_t endpoint = 0;
  std::size_t hit = 0;
  std::size_t step = 0;
  S endpoint_value{};
};

/// Tracks the forward orbits of the interior endpoints start(1..m-1).
/// Rational mode follows each orbit until it hits an endpoint (it must:
/// the orbit is periodic), ignoring the horizon; Real mode stops at the
/// horizon and compares with tolerance 1e-30.
template <class S>
KeaneResult<S> keane_check(const BasicIet<S>& T, std::size_t horizon);

/// First n symbols of the interval itinerary, 1-based interval indices.
template <class S>
std::vector<int> natural_coding(const BasicIet<S>& T, const S& x, std::size_t n);

template <class S>
struct BasicCodingResult {
  /// Symbols before the cycle (0 = A, 1 = B).
  std::vector<Word::Symbol> prefix;
  /// Periodic tail; always present in Rational mode, never in Real mode.
  std::optional<Word> cycle;
  /// H_l(x) = sum_n chi_B(T^n x) / 2^(n+1).
  S value{};
  /// |value - H_l(x)| <= error_bound (zero in Rational mode).
  S error_bound{};
  /// Number of T-steps until the orbit point repeats (Rational mode).
  std::size_t orbit_period = 0;

  std::string str() const;
};

using CodingResult = BasicCodingResult<Rational>;
using RealCodingResult = BasicCodingResult<Real>;

/// The A,B itinerary of x and the exact value H_l(x). x in [0, 1) for
/// Side::Right, x in (0, 1] for Side::Left.
CodingResult ab_coding(const DeckShuffler& T, const Rational& x, Side side = Side::Right);

/// Bounded-precision A,B coding truncated at `depth` symbols.
RealCodingResult ab_coding(const RealDeckShuffler& T, const Real& x, int depth = kDefaultDepth,
                           Side side = Side::Right);

/// Value of the eventually periodic binary word prefix.(cycle)^inf.
Rational binary_value(std::span<const Word::Symbol> prefix, const Word& cycle);

struct Plateau {
  Rational lo;
  Rational hi;  ///< plateau is [lo, hi)
  Rational value;
  Word cycle;  ///< A,B cycle word read from lo
  std::size_t period = 0;
};

struct HGraphSample {
  Rational x;
  Rational value;
  std::size_t plateau = 0;
};

struct HGraph {
  std::vector<Plateau> plateaus;
  std::vector<HGraphSample> samples;
};

/// Piecewise description of H_l for rational lengths. With common
/// denominator q, T permutes the cells [j/q, (j+1)/q) by translation, so H_l
/// is a step function; maximal runs of cells with equal value are plateaus.
/// `resolution` midpoint samples are attached for plotting/export.
HGraph h_graph(const DeckShuffler& T, std::size_t resolution = 0);

/// Largest common denominator accepted by h_graph.
inline constexpr std::int64_t kMaxCells = 5'000'000;

struct IetFlower {
  Flower flower;
  /// Closed hulls of H(A_1), ..., H(A_{m-1}), H(A_m u B_1), H(B_2), ..., H(B_m)
  /// (exact, or rounded to the dyadic value of the bounded-precision hull).
  std::vector<Arc> hulls;
  /// Flower hulls that are single points.
  std::size_t degenerate_hulls = 0;
};

/// The (2m-1)-flower containing H_l([0, 1)). Checks the interleaving chain
/// H(B_1)-1/2 <= H(A_1) <= H(B_2)-1/2 <= ... <= H(A_m) < 1/2 on the hulls and
/// the non-collapsing property; any failure throws ConsistencyError with
/// witnesses.
IetFlower flower_from_iet(const DeckShuffler& T);
IetFlower flower_from_iet(const RealDeckShuffler& T, int depth = kDefaultDepth);

/// Largest circular distance in the endpoint matching conditions
///   H(a_{i,1}) = H(b_{i,2}-) - 1/2        (1 <= i <= m)
///   H(a_{i,2}-) = H(b_{i+1,1}) + 1/2      (1 <= i <= m-1)
/// which pin down the flower uniquely for Keane deck shufflers.
Real endpoint_matching_defect(const RealDeckShuffler& T, int depth = kDefaultDepth);

extern template class BasicIet<Rational>;
extern template class BasicIet<Real>;
extern template class BasicDeckShuffler<Rational>;
extern template class BasicDeckShuffler<Real>;

}  // namespace flowers
