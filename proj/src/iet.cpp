#include "flowers/iet.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace flowers {

namespace {

template <class S>
constexpr bool kExact = std::is_same_v<S, Rational>;

template <class S>
std::string to_str(const S& v) {
  if constexpr (kExact<S>) {
    return v.str();
  } else {
    return v.str(30);
  }
}

// Tolerance for "equal" in bounded-precision comparisons of orbit points.
const Real& real_point_tolerance() {
  static const Real tol("1e-30");
  return tol;
}

template <class S>
bool same_point(const S& a, const S& b) {
  if constexpr (kExact<S>) {
    return a == b;
  } else {
    return boost::multiprecision::abs(a - b) <= real_point_tolerance();
  }
}

std::string symbols_str(std::span<const Word::Symbol> s) {
  std::string out;
  for (auto c : s) out.push_back(static_cast<char>('0' + c));
  return out;
}

}  // namespace

Real to_real(const Rational& r) {
  return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
}

Rational to_rational(const Real& x) {
  using boost::multiprecision::frexp;
  using boost::multiprecision::floor;
  if (x == 0) return Rational(0);
  if (!boost::multiprecision::isfinite(x)) throw ValidationError("cannot convert a non-finite value");
  int exponent = 0;
  Real mantissa = frexp(boost::multiprecision::abs(x), &exponent);  // in [1/2, 1)
  constexpr int kChunk = 32;
  const int chunks = std::numeric_limits<Real>::digits / kChunk + 2;
  const Real scale = Real(4294967296.0);
  Integer acc = 0;
  for (int i = 0; i < chunks; ++i) {
    mantissa *= scale;
    const Real digit = floor(mantissa);
    mantissa -= digit;
    acc <<= kChunk;
    acc += digit.convert_to<unsigned long>();
  }
  const long shift = static_cast<long>(exponent) - static_cast<long>(chunks) * kChunk;
  Integer num = acc;
  Integer den = 1;
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  if (x < 0) num = -num;
  return Rational(num, den);
}

template <class S>
BasicIet<S>::BasicIet(std::vector<S> lengths, std::vector<int> permutation)
    : lengths_(std::move(lengths)), permutation_(std::move(permutation)) {
  const std::size_t n = lengths_.size();
  if (n == 0) throw ValidationError("an IET needs at least one interval");
  if (permutation_.size() != n) {
    throw ValidationError("permutation has " + std::to_string(permutation_.size()) + " entries for " +
                          std::to_string(n) + " intervals");
  }
  std::vector<bool> seen(n, false);
  for (int p : permutation_) {
    if (p < 1 || static_cast<std::size_t>(p) > n || seen[p - 1]) {
      throw ValidationError("permutation is not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[p - 1] = true;
  }
  S sum(0);
  for (const S& l : lengths_) {
    if (!(l > 0)) throw ValidationError("IET lengths must be positive, got " + to_str(l));
    sum += l;
  }
  if constexpr (kExact<S>) {
    if (sum != Rational(1)) throw ValidationError("IET lengths sum to " + sum.str() + ", expected 1");
  } else {
    if (boost::multiprecision::abs(sum - 1) > Real("1e-40")) {
      throw ValidationError("IET lengths sum to " + to_str(sum) + ", expected 1");
    }
  }

  starts_.resize(n + 1);
  starts_[0] = S(0);
  for (std::size_t k = 0; k < n; ++k) starts_[k + 1] = starts_[k] + lengths_[k];
  starts_[n] = S(1);

  translations_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    S t(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (permutation_[j] < permutation_[k]) t += lengths_[j];
    }
    t -= starts_[k];
    translations_[k] = t;
  }
}

template <class S>
std::size_t BasicIet<S>::interval_of(const S& x, Side side) const {
  const std::size_t n = lengths_.size();
  if constexpr (kExact<S>) {
    const bool ok = side == Side::Right ? (x.sign() >= 0 && x < Rational(1)) : (x.sign() > 0 && x <= Rational(1));
    if (!ok) {
      throw ValidationError("point " + x.str() + (side == Side::Right ? " is outside [0, 1)" : " is outside (0, 1]"));
    }
  }
  if (side == Side::Right) {
    // largest k with start(k) <= x
    const auto it = std::upper_bound(starts_.begin() + 1, starts_.begin() + static_cast<std::ptrdiff_t>(n), x);
    return static_cast<std::size_t>(it - starts_.begin()) - 1;
  }
  // smallest k with x <= start(k + 1)
  const auto it = std::lower_bound(starts_.begin() + 1, starts_.begin() + static_cast<std::ptrdiff_t>(n), x);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

std::vector<int> deck_shuffler_permutation(std::size_t m) {
  std::vector<int> perm(2 * m);
  for (std::size_t i = 1; i <= m; ++i) {
    perm[i - 1] = static_cast<int>(2 * i);
    perm[m + i - 1] = static_cast<int>(2 * i - 1);
  }
  return perm;
}

namespace {

template <class S>
std::vector<S> checked_deck_lengths(std::vector<S> lengths) {
  if (lengths.empty() || lengths.size() % 2 != 0) {
    throw ValidationError("a deck shuffler needs an even, positive number of lengths, got " +
                          std::to_string(lengths.size()));
  }
  return lengths;
}

}  // namespace

template <class S>
BasicDeckShuffler<S>::BasicDeckShuffler(std::vector<S> lengths)
    : m_(lengths.size() / 2),
      iet_(checked_deck_lengths(std::move(lengths)), deck_shuffler_permutation(m_)) {}

template <class S>
S BasicDeckShuffler<S>::apply_explicit(const S& x) const {
  const auto& l = lengths();
  const std::size_t k = iet_.interval_of(x);
  S out = x;
  if (k < m_) {
    for (std::size_t j = 0; j <= k; ++j) out += l[m_ + j];
  } else {
    for (std::size_t j = k - m_; j < m_; ++j) out -= l[j];
  }
  return out;
}

DeckShuffler deck_shuffler(std::vector<Rational> lengths) { return DeckShuffler(std::move(lengths)); }

template <class S>
bool is_irreducible(const BasicIet<S>& T) {
  const auto& perm = T.permutation();
  int reach = 0;
  for (std::size_t j = 0; j + 1 < perm.size(); ++j) {
    reach = std::max(reach, perm[j]);
    if (static_cast<std::size_t>(reach) == j + 1) return false;
  }
  return true;
}

template <class S>
KeaneResult<S> keane_check(const BasicIet<S>& T, std::size_t horizon) {
  if (horizon < 1) throw ValidationError("keane_check needs horizon >= 1");
  using Status = typename KeaneResult<S>::Status;
  KeaneResult<S> result;
  const std::size_t n = T.size();
  if (n < 2) {
    result.status = Status::Satisfied;
    return result;
  }
  std::vector<S> ends;
  for (std::size_t k = 1; k < n; ++k) ends.push_back(T.start(k));

  auto hit_index = [&](const S& x) -> std::size_t {
    if constexpr (kExact<S>) {
      const auto it = std::lower_bound(ends.begin(), ends.end(), x);
      return it != ends.end() && *it == x ? static_cast<std::size_t>(it - ends.begin()) + 1 : 0;
    } else {
      for (std::size_t j = 0; j < ends.size(); ++j) {
        if (same_point(ends[j], x)) return j + 1;
      }
      return 0;
    }
  };

  bool found = false;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    S x = ends[k];
    for (std::size_t step = 1;; ++step) {
      if constexpr (!kExact<S>) {
        if (step > horizon) break;
      }
      if (found && step >= result.step) break;
      x = T.apply(x);
      if (const std::size_t j = hit_index(x); j != 0) {
        found = true;
        result.status = Status::Violation;
        result.endpoint = k + 1;
        result.hit = j;
        result.step = step;
        result.endpoint_value = ends[k];
        break;
      }
    }
  }
  if (!found) result.status = kExact<S> ? Status::Satisfied : Status::Undecided;
  return result;
}

template <class S>
std::vector<int> natural_coding(const BasicIet<S>& T, const S& x, std::size_t n) {
  std::vector<int> out;
  out.reserve(n);
  S y = x;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = T.interval_of(y);
    out.push_back(static_cast<int>(k) + 1);
    y += T.translation(k);
  }
  return out;
}

template <class S>
std::string BasicCodingResult<S>::str() const {
  std::string out = "0." + symbols_str(prefix);
  if (cycle) out += "(" + cycle->str() + ")";
  out += " = " + to_str(value);
  if constexpr (!kExact<S>) out += " +- " + to_str(error_bound);
  return out;
}

Rational binary_value(std::span<const Word::Symbol> prefix, const Word& cycle) {
  Integer u = 0;
  for (auto s : prefix) u = 2 * u + s;
  const Integer v = cycle.as_integer();
  const Integer period = ipow(2, static_cast<unsigned>(cycle.size())) - 1;
  const Integer scale = ipow(2, static_cast<unsigned>(prefix.size()));
  return Rational(u * period + v, scale * period);
}

CodingResult ab_coding(const DeckShuffler& T, const Rational& x, Side side) {
  const auto& iet = T.iet();
  std::unordered_map<Rational, std::size_t> seen;
  std::vector<Word::Symbol> symbols;
  Rational y = x;
  while (true) {
    auto [it, inserted] = seen.try_emplace(y, symbols.size());
    if (!inserted) {
      const std::size_t start = it->second;
      CodingResult r;
      r.prefix.assign(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(start));
      r.cycle = Word(std::vector<Word::Symbol>(symbols.begin() + static_cast<std::ptrdiff_t>(start), symbols.end()), 2);
      r.value = binary_value(r.prefix, *r.cycle);
      r.error_bound = Rational(0);
      r.orbit_period = symbols.size() - start;
      return r;
    }
    const std::size_t k = iet.interval_of(y, side);
    symbols.push_back(k >= T.m() ? 1 : 0);
    y += iet.translation(k);
  }
}

RealCodingResult ab_coding(const RealDeckShuffler& T, const Real& x, int depth, Side side) {
  if (depth < 1) throw ValidationError("coding depth must be >= 1");
  const auto& iet = T.iet();
  const bool ok = side == Side::Right ? (x >= 0 && x < 1) : (x > 0 && x <= 1);
  if (!ok) throw ValidationError("point " + to_str(x) + " is outside the coding domain");
  RealCodingResult r;
  Real y = x;
  Real weight = Real(0.5);
  Real value = 0;
  for (int i = 0; i < depth; ++i) {
    const std::size_t k = iet.interval_of(y, side);
    const Word::Symbol s = k >= T.m() ? 1 : 0;
    r.prefix.push_back(s);
    if (s) value += weight;
    weight /= 2;
    y += iet.translation(k);
  }
  r.value = value;
  r.error_bound = weight * 2;  // 2^-depth
  return r;
}

HGraph h_graph(const DeckShuffler& T, std::size_t resolution) {
  const auto& iet = T.iet();
  Integer q_big = 1;
  for (const Rational& l : T.lengths()) mpz_lcm(q_big.get_mpz_t(), q_big.get_mpz_t(), l.denominator().get_mpz_t());
  if (q_big > kMaxCells) {
    throw ValidationError("common denominator " + q_big.get_str() + " exceeds the cell limit " +
                          std::to_string(kMaxCells));
  }
  const auto q = static_cast<std::int64_t>(q_big.get_si());
  const auto cells = static_cast<std::size_t>(q);

  // Interval index and image of every cell [j/q, (j+1)/q).
  std::vector<std::int64_t> next(cells);
  std::vector<Word::Symbol> symbol(cells);
  {
    std::size_t k = 0;
    for (std::size_t j = 0; j < cells; ++j) {
      while (k + 1 < iet.size() && iet.start(k + 1) <= Rational(static_cast<long>(j), static_cast<long>(q))) ++k;
      const Rational shift = iet.translation(k) * Rational(static_cast<long>(q));
      next[j] = static_cast<std::int64_t>(j) + shift.numerator().get_si();
      symbol[j] = k >= T.m() ? 1 : 0;
    }
  }

  std::vector<Rational> value(cells);
  std::vector<std::size_t> period(cells, 0);
  std::vector<std::size_t> cycle_id(cells, 0);
  std::vector<std::vector<Word::Symbol>> cycle_words;
  std::vector<std::size_t> offset(cells, 0);
  for (std::size_t j = 0; j < cells; ++j) {
    if (period[j] != 0) continue;
    std::vector<std::size_t> members;
    std::vector<Word::Symbol> word;
    std::size_t c = j;
    do {
      members.push_back(c);
      word.push_back(symbol[c]);
      c = static_cast<std::size_t>(next[c]);
    } while (c != j);
    const std::size_t len = members.size();
    const Word w(word, 2);
    if (w.primitive_period() != len) {
      throw ConsistencyError("cell orbit of length " + std::to_string(len) + " carries the non-primitive cycle " +
                             w.str());
    }
    const Integer denom = ipow(2, static_cast<unsigned>(len)) - 1;
    Integer v = w.as_integer();
    for (std::size_t i = 0; i < len; ++i) {
      value[members[i]] = Rational(v, denom);
      period[members[i]] = len;
      cycle_id[members[i]] = cycle_words.size();
      offset[members[i]] = i;
      v = 2 * v - Integer(word[i]) * denom;
    }
    cycle_words.push_back(std::move(word));
  }

  HGraph graph;
  std::vector<std::size_t> plateau_of(cells);
  for (std::size_t j = 0; j < cells; ++j) {
    if (j > 0 && value[j] == value[j - 1]) {
      if (period[j] != graph.plateaus.back().period) {
        throw ConsistencyError("plateau at " + graph.plateaus.back().lo.str() + " mixes periods");
      }
      graph.plateaus.back().hi = Rational(static_cast<long>(j + 1), static_cast<long>(q));
    } else {
      if (j > 0 && value[j] < value[j - 1]) {
        throw ConsistencyError("H_l decreases at " + Rational(static_cast<long>(j), static_cast<long>(q)).str());
      }
      const auto& word = cycle_words[cycle_id[j]];
      std::vector<Word::Symbol> rotated(word.begin() + static_cast<std::ptrdiff_t>(offset[j]), word.end());
      rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(offset[j]));
      graph.plateaus.push_back(Plateau{Rational(static_cast<long>(j), static_cast<long>(q)),
                                       Rational(static_cast<long>(j + 1), static_cast<long>(q)), value[j],
                                       Word(std::move(rotated), 2), period[j]});
    }
    plateau_of[j] = graph.plateaus.size() - 1;
  }

  for (std::size_t i = 0; i < resolution; ++i) {
    const Rational x(static_cast<long>(2 * i + 1), static_cast<long>(2 * resolution));
    const auto cell = static_cast<std::size_t>((x * Rational(static_cast<long>(q))).floor().get_si());
    graph.samples.push_back(HGraphSample{x, value[cell], plateau_of[cell]});
  }
  return graph;
}

namespace {

// Hull [H(lo), H(hi-)] of H over the interval [lo, hi); H is increasing.
struct LineHull {
  Rational lo;
  Rational hi;
};

std::string hull_str(const LineHull& h) { return "[" + h.lo.str() + ", " + h.hi.str() + "]"; }

template <class S, class Code>
IetFlower build_iet_flower(const BasicDeckShuffler<S>& T, Code code, const Rational& slack) {
  const std::size_t m = T.m();
  const Rational half(1, 2);
  auto hull = [&](const S& lo, const S& hi) {
    return LineHull{code(lo, Side::Right), code(hi, Side::Left)};
  };
  std::vector<LineHull> a(m);
  std::vector<LineHull> b(m);
  for (std::size_t i = 1; i <= m; ++i) {
    a[i - 1] = hull(T.a_lo(i), T.a_hi(i));
    b[i - 1] = hull(T.b_lo(i), T.b_hi(i));
  }

  // H(B_1)-1/2, H(A_1), H(B_2)-1/2, H(A_2), ..., H(B_m)-1/2, H(A_m)
  std::vector<LineHull> chain;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    chain.push_back(LineHull{b[i].lo - half, b[i].hi - half});
    names.push_back("H(B_" + std::to_string(i + 1) + ")-1/2");
    chain.push_back(a[i]);
    names.push_back("H(A_" + std::to_string(i + 1) + ")");
  }
  std::vector<std::string> failures;
  if (chain.front().lo + slack < Rational(0)) {
    failures.push_back(names.front() + " = " + hull_str(chain.front()) + " starts below 0");
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (chain[k].hi > chain[k + 1].lo + slack) {
      failures.push_back(names[k] + " = " + hull_str(chain[k]) + " overlaps " + names[k + 1] + " = " +
                         hull_str(chain[k + 1]));
    } else if (chain[k].hi > chain[k + 1].lo) {
      // within rounding: make the hulls touch
      chain[k].hi = chain[k + 1].lo;
    }
  }
  if (chain.back().hi >= half + slack) {
    failures.push_back(names.back() + " = " + hull_str(chain.back()) + " reaches 1/2");
  }
  if (!failures.empty()) {
    std::string msg = "deck shuffler hull chain violated:";
    for (const auto& f : failures) msg += " [" + f + "]";
    throw ConsistencyError(msg);
  }

  // Counterclockwise petal/antipetal sequence starting at H(A_1).
  auto span = [](const Rational& lo, const Rational& hi) { return HullSpan{CirclePoint(lo), hi - lo}; };
  std::vector<HullSpan> seq;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    seq.push_back(span(chain[2 * i + 1].lo, chain[2 * i + 1].hi));
    seq.push_back(span(chain[2 * i + 2].lo, chain[2 * i + 2].hi));
  }
  // H(A_m u B_1) = [H(A_m).lo, H(B_1).hi]
  const Rational merged_hi = chain.front().hi + half;
  seq.push_back(span(chain.back().lo, merged_hi));

  IetFlower out{flower_from_hull_sequence(seq), {}, 0};
  auto add_hull = [&](const Rational& lo, const Rational& hi) {
    out.hulls.push_back(Arc{CirclePoint(lo), CirclePoint(hi)});
  };
  for (std::size_t i = 0; i + 1 < m; ++i) add_hull(chain[2 * i + 1].lo, chain[2 * i + 1].hi);
  add_hull(chain.back().lo, merged_hi);
  for (std::size_t i = 1; i < m; ++i) add_hull(chain[2 * i].lo + half, chain[2 * i].hi + half);

  for (const Arc& h : out.hulls) {
    if (h.is_point()) ++out.degenerate_hulls;
    const auto p = out.flower.petal_of(h.left);
    if (!p || !out.flower.petals()[*p].contains(h.right) ||
        out.flower.petals()[*p].length() < h.length()) {
      throw ConsistencyError("hull [" + h.left.str() + ", " + h.right.str() + "] is not inside one petal");
    }
  }
  if (const auto violations = validate_flower(out.flower); !violations.empty()) {
    std::string msg = "flower from deck shuffler is invalid:";
    for (const auto& v : violations) msg += " [" + to_string(v.kind) + ": " + v.detail + "]";
    throw ConsistencyError(msg);
  }
  return out;
}

}  // namespace

IetFlower flower_from_iet(const DeckShuffler& T) {
  auto code = [&](const Rational& x, Side side) { return ab_coding(T, x, side).value; };
  return build_iet_flower(T, code, Rational(0));
}

IetFlower flower_from_iet(const RealDeckShuffler& T, int depth) {
  if (depth < 4) throw ValidationError("bounded-precision flowers need depth >= 4");
  auto code = [&](const Real& x, Side side) { return to_rational(ab_coding(T, x, depth, side).value); };
  const Rational slack(Integer(1), ipow(2, static_cast<unsigned>(depth - 2)));
  return build_iet_flower(T, code, slack);
}

Real endpoint_matching_defect(const RealDeckShuffler& T, int depth) {
  auto H = [&](const Real& x, Side side) { return ab_coding(T, x, depth, side).value; };
  auto circ = [](const Real& a, const Real& b) {
    Real d = a - b;
    d -= boost::multiprecision::floor(d);
    return d > Real(0.5) ? Real(1) - d : d;
  };
  Real worst = 0;
  const std::size_t m = T.m();
  for (std::size_t i = 1; i <= m; ++i) {
    worst = std::max(worst, circ(H(T.a_lo(i), Side::Right), H(T.b_hi(i), Side::Left) - Real(0.5)));
    if (i < m) worst = std::max(worst, circ(H(T.a_hi(i), Side::Left), H(T.b_lo(i + 1), Side::Right) + Real(0.5)));
  }
  return worst;
}

template class BasicIet<Rational>;
template class BasicIet<Real>;
template class BasicDeckShuffler<Rational>;
template class BasicDeckShuffler<Real>;
template struct BasicCodingResult<Rational>;
template struct BasicCodingResult<Real>;

template bool is_irreducible(const BasicIet<Rational>&);
template bool is_irreducible(const BasicIet<Real>&);
template KeaneResult<Rational> keane_check(const BasicIet<Rational>&, std::size_t);
template KeaneResult<Real> keane_check(const BasicIet<Real>&, std::size_t);
template std::vector<int> natural_coding(const BasicIet<Rational>&, const Rational&, std::size_t);
template std::vector<int> natural_coding(const BasicIet<Real>&, const Real&, std::size_t);

}  // namespace flowers
