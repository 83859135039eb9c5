#pragma once

// Exact rational and circle arithmetic.
//
// Every coordinate in the library is a reduced fraction backed by GMP. A
// CirclePoint is a Rational normalized into [0, 1), i.e. a point of R/Z.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flowers {

/// Thrown for malformed user input (bad lengths, bad words, bad flowers...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computed object contradicts a proved structural property
/// (e.g. a deck shuffler whose coding is not monotone). Never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  /// Parses "p/q", "p" or a finite decimal such as "0.15" (exactly 3/20).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer <= value.
  Integer floor() const;
  /// value - floor(value), in [0, 1).
  Rational frac() const;

  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// d^n as an arbitrary-precision integer.
Integer ipow(long base, unsigned exponent);

class CirclePoint {
 public:
  CirclePoint() = default;
  /// Normalizes mod 1.
  explicit CirclePoint(const Rational& r) : value_(r.frac()) {}
  CirclePoint(long num, long den) : CirclePoint(Rational(num, den)) {}

  static CirclePoint parse(std::string_view text) { return CirclePoint(Rational::parse(text)); }

  const Rational& value() const { return value_; }
  double to_double() const { return value_.to_double(); }
  std::string str() const { return value_.str(); }

  CirclePoint operator+(const Rational& shift) const { return CirclePoint(value_ + shift); }
  CirclePoint operator-(const Rational& shift) const { return CirclePoint(value_ - shift); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const CirclePoint& p);

/// Counterclockwise distance from `from` to `to`, in [0, 1).
Rational forward_distance(const CirclePoint& from, const CirclePoint& to);

/// E_d(x) = d x mod 1. Throws ValidationError for d < 2.
CirclePoint expand(const CirclePoint& x, int d);

/// x + 1/2 mod 1.
CirclePoint antipode(const CirclePoint& x);

template <class Label>
struct LabeledPoint {
  CirclePoint point;
  Label label;
};

template <class Label>
struct CircularSortResult {
  std::vector<LabeledPoint<Label>> entries;
  /// Indices i > 0 with entries[i].point == entries[i - 1].point.
  std::vector<std::size_t> duplicates;

  bool has_duplicates() const { return !duplicates.empty(); }
};

/// Stable sort by coordinate. Coincident points are kept and reported.
template <class Label>
CircularSortResult<Label> circular_sort(std::vector<LabeledPoint<Label>> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.point < b.point; });
  CircularSortResult<Label> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].point == points[i - 1].point) out.duplicates.push_back(i);
  }
  out.entries = std::move(points);
  return out;
}

}  // namespace flowers

template <>
struct std::hash<flowers::Rational> {
  std::size_t operator()(const flowers::Rational& r) const noexcept { return r.hash(); }
};

template <>
struct std::hash<flowers::CirclePoint> {
  std::size_t operator()(const flowers::CirclePoint& p) const noexcept { return p.value().hash(); }
};
