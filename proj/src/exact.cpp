#include "flowers/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace flowers {

Rational::Rational(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ValidationError("not a rational number: '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ValidationError("not a rational number: '" + std::string(text) + "'");
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    if (negative) num = -num;
    return Rational(num, ipow(10, static_cast<unsigned>(frac_part.size())));
  }
  return Rational(parse_integer(text, text), Integer(1));
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::frac() const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(r, q_.get_den());
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  auto mix = [](std::size_t h, const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    const std::size_t n = mpz_size(p);
    h ^= static_cast<std::size_t>(mpz_sgn(p) + 1) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return h;
  };
  return mix(mix(0, q_.get_num()), q_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const CirclePoint& p) { return os << p.str(); }

Integer ipow(long base, unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
  if (base < 0 && (exponent % 2 == 1)) out = -out;
  return out;
}

Rational forward_distance(const CirclePoint& from, const CirclePoint& to) {
  return (to.value() - from.value()).frac();
}

CirclePoint expand(const CirclePoint& x, int d) {
  if (d < 2) throw ValidationError("expanding map needs d >= 2, got " + std::to_string(d));
  return CirclePoint(x.value() * Rational(d));
}

CirclePoint antipode(const CirclePoint& x) { return x + Rational(1, 2); }

}  // namespace flowers
