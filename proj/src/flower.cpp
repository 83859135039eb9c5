#include "flowers/flower.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace flowers {

namespace {

// Closed subsets of the circle as sorted disjoint closed intervals of the
// line segment [0, 1], with the convention that 1 is a member iff 0 is.
using Interval = std::pair<Rational, Rational>;
using IntervalSet = std::vector<Interval>;

IntervalSet normalize(IntervalSet set) {
  std::sort(set.begin(), set.end());
  IntervalSet out;
  for (auto& iv : set) {
    if (!out.empty() && iv.first <= out.back().second) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(std::move(iv));
    }
  }
  const bool has_zero = !out.empty() && out.front().first.is_zero();
  const bool has_one = !out.empty() && out.back().second == Rational(1);
  if (has_one && !has_zero) out.insert(out.begin(), Interval{Rational(0), Rational(0)});
  if (has_zero && !has_one) out.push_back(Interval{Rational(1), Rational(1)});
  return out;
}

IntervalSet to_intervals(const Arc& arc) {
  const Rational& l = arc.left.value();
  const Rational& r = arc.right.value();
  if (l <= r) return {{l, r}};
  return {{l, Rational(1)}, {Rational(0), r}};
}

IntervalSet to_intervals(std::span<const Arc> arcs) {
  IntervalSet out;
  for (const Arc& a : arcs) {
    for (auto& iv : to_intervals(a)) out.push_back(std::move(iv));
  }
  return normalize(std::move(out));
}

IntervalSet preimage(const IntervalSet& set, int d) {
  IntervalSet out;
  out.reserve(set.size() * static_cast<std::size_t>(d));
  const Rational dd(d);
  for (const auto& [a, b] : set) {
    for (int i = 0; i < d; ++i) out.emplace_back((a + Rational(i)) / dd, (b + Rational(i)) / dd);
  }
  return normalize(std::move(out));
}

IntervalSet intersect(const IntervalSet& x, const IntervalSet& y) {
  IntervalSet out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = std::max(x[i].first, y[j].first);
    const Rational& hi = std::min(x[i].second, y[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (x[i].second < y[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return normalize(std::move(out));
}

std::vector<Arc> to_arcs(const IntervalSet& set) {
  std::vector<Arc> arcs;
  if (set.empty()) return arcs;
  IntervalSet body = set;
  std::optional<Rational> wrap_left;
  // [x, 1] and [0, y] are one arc through 0.
  if (body.back().second == Rational(1)) {
    wrap_left = body.back().first;
    body.pop_back();
  }
  if (wrap_left && body.empty()) throw ConsistencyError("arc set covers the whole circle");
  std::size_t start = 0;
  if (wrap_left) {
    const Rational right = body.front().second;
    arcs.push_back(Arc{CirclePoint(*wrap_left), CirclePoint(right)});
    start = 1;
  }
  for (std::size_t i = start; i < body.size(); ++i) {
    arcs.push_back(Arc{CirclePoint(body[i].first), CirclePoint(body[i].second)});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.left < b.left; });
  return arcs;
}

bool open_arcs_meet(const Arc& a, const Arc& b) {
  if (a.is_point() || b.is_point()) return false;
  return forward_distance(a.left, b.left) < a.length() || forward_distance(b.left, a.left) < b.length();
}

bool closed_arcs_meet(const Arc& a, const Arc& b) { return a.contains(b.left) || b.contains(a.left); }

std::string arc_str(const Arc& a) { return "[" + a.left.str() + ", " + a.right.str() + "]"; }

}  // namespace

Flower::Flower(std::vector<Arc> petals, int d) : petals_(std::move(petals)), d_(d) {
  std::sort(petals_.begin(), petals_.end(), [](const Arc& a, const Arc& b) { return a.left < b.left; });
}

Rational Flower::total_length() const {
  Rational sum(0);
  for (const Arc& p : petals_) sum += p.length();
  return sum;
}

bool Flower::contains(const CirclePoint& x) const { return petal_of(x).has_value(); }

bool Flower::contains_interior(const CirclePoint& x) const {
  return std::any_of(petals_.begin(), petals_.end(), [&](const Arc& p) { return p.contains_interior(x); });
}

std::optional<std::size_t> Flower::petal_of(const CirclePoint& x) const {
  for (std::size_t i = 0; i < petals_.size(); ++i) {
    if (petals_[i].contains(x)) return i;
  }
  return std::nullopt;
}

std::string to_string(FlowerViolation::Kind kind) {
  switch (kind) {
    case FlowerViolation::Kind::BadDegree: return "bad degree";
    case FlowerViolation::Kind::NoPetals: return "no petals";
    case FlowerViolation::Kind::DegeneratePetal: return "degenerate petal";
    case FlowerViolation::Kind::Overlap: return "overlap";
    case FlowerViolation::Kind::WrongMeasure: return "wrong total measure";
    case FlowerViolation::Kind::NotCovering: return "translates do not cover the circle";
    case FlowerViolation::Kind::TranslateInteriorIntersection: return "translate interior intersection";
    case FlowerViolation::Kind::AntipodalMismatch: return "antipodal endpoint mismatch";
    case FlowerViolation::Kind::EvenPetalCount: return "even petal count";
  }
  return "unknown";
}

std::vector<FlowerViolation> validate_flower(const Flower& flower) {
  using Kind = FlowerViolation::Kind;
  std::vector<FlowerViolation> out;
  const int d = flower.d();
  const auto& petals = flower.petals();
  if (d < 2) {
    out.push_back({Kind::BadDegree, "d = " + std::to_string(d)});
    return out;
  }
  if (petals.empty()) {
    out.push_back({Kind::NoPetals, "flower has no petals"});
    return out;
  }
  for (const Arc& p : petals) {
    if (p.is_point()) out.push_back({Kind::DegeneratePetal, arc_str(p)});
  }
  for (std::size_t i = 0; i < petals.size(); ++i) {
    for (std::size_t j = i + 1; j < petals.size(); ++j) {
      if (closed_arcs_meet(petals[i], petals[j])) {
        out.push_back({Kind::Overlap, arc_str(petals[i]) + " meets " + arc_str(petals[j])});
      }
    }
  }
  if (const Rational total = flower.total_length(); total != Rational(1, d)) {
    out.push_back({Kind::WrongMeasure, "total length " + total.str() + ", expected 1/" + std::to_string(d)});
  }

  std::vector<Arc> translates;
  for (const Arc& p : petals) {
    for (int i = 0; i < d; ++i) {
      const Rational shift(i, d);
      translates.push_back(Arc{p.left + shift, p.right + shift});
    }
  }
  for (const Arc& p : petals) {
    for (int i = 1; i < d; ++i) {
      const Rational shift(i, d);
      const Arc t{p.left + shift, p.right + shift};
      for (const Arc& q : petals) {
        if (open_arcs_meet(t, q)) {
          out.push_back({Kind::TranslateInteriorIntersection,
                         arc_str(p) + " + " + shift.str() + " meets interior of " + arc_str(q)});
        }
      }
    }
  }
  {
    const IntervalSet cover = to_intervals(translates);
    const bool full = cover.size() == 1 && cover.front().first.is_zero() && cover.front().second == Rational(1);
    if (!full) {
      std::ostringstream msg;
      msg << "uncovered gaps:";
      Rational reach(0);
      for (const auto& [a, b] : cover) {
        if (a > reach) msg << " (" << reach << ", " << a << ")";
        reach = std::max(reach, b);
      }
      if (reach < Rational(1)) msg << " (" << reach << ", 1)";
      out.push_back({Kind::NotCovering, msg.str()});
    }
  }
  if (d == 2) {
    std::set<CirclePoint> endpoints;
    for (const Arc& p : petals) {
      endpoints.insert(p.left);
      endpoints.insert(p.right);
    }
    for (const CirclePoint& e : endpoints) {
      if (!endpoints.contains(antipode(e))) {
        out.push_back({Kind::AntipodalMismatch, "endpoint " + e.str() + " has no antipodal endpoint"});
      }
    }
    if (petals.size() % 2 == 0) {
      out.push_back({Kind::EvenPetalCount, std::to_string(petals.size()) + " petals"});
    }
  }
  return out;
}

void require_valid_flower(const Flower& flower) {
  const auto violations = validate_flower(flower);
  if (violations.empty()) return;
  std::string msg = "invalid flower:";
  for (const auto& v : violations) msg += " [" + to_string(v.kind) + ": " + v.detail + "]";
  throw ValidationError(msg);
}

CirclePoint preimage_select(const Flower& flower, const CirclePoint& x) {
  const int d = flower.d();
  for (int i = 0; i < d; ++i) {
    const CirclePoint y((x.value() + Rational(i)) / Rational(d));
    for (const Arc& p : flower.petals()) {
      if (p.contains_half_open(y)) return y;
    }
  }
  throw ConsistencyError("no preimage of " + x.str() + " lies in the flower");
}

std::vector<Arc> maximal_invariant_approx(const Flower& flower, int k) {
  if (k < 0) throw ValidationError("maximal_invariant_approx needs k >= 0");
  const IntervalSet base = to_intervals(flower.petals());
  IntervalSet current = base;
  // M_{j+1} = F n E^-1(M_j)
  for (int j = 0; j < k; ++j) current = intersect(base, preimage(current, flower.d()));
  return to_arcs(current);
}

Flower flower_from_hull_sequence(std::span<const HullSpan> half) {
  const std::size_t p = half.size();
  if (p == 0 || p % 2 == 0) throw ConsistencyError("hull sequence must have odd length");
  const Rational one_half(1, 2);
  auto full = [&](std::size_t i) -> HullSpan {
    i %= 2 * p;
    if (i < p) return half[i];
    return HullSpan{half[i - p].lo + one_half, half[i - p].length};
  };

  std::vector<Rational> gaps(p);
  Rational total(0);
  for (std::size_t i = 0; i < p; ++i) {
    gaps[i] = forward_distance(full(i).hi(), full(i + 1).lo);
    total += gaps[i] + half[i].length;
  }
  if (total != one_half) {
    std::ostringstream msg;
    msg << "hull sequence overlaps: lengths plus gaps of half the sequence sum to " << total;
    throw ConsistencyError(msg.str());
  }

  std::vector<CirclePoint> cuts(2 * p);
  for (std::size_t i = 0; i < p; ++i) {
    cuts[i] = full(i).hi() + gaps[i] / Rational(2);
    cuts[i + p] = cuts[i] + one_half;
  }
  std::vector<Arc> petals;
  for (std::size_t j = 0; j < 2 * p; ++j) {
    const bool is_petal = j < p ? (j % 2 == 0) : ((j - p) % 2 == 1);
    if (!is_petal) continue;
    const Arc petal{cuts[(j + 2 * p - 1) % (2 * p)], cuts[j]};
    if (petal.is_point()) {
      throw ConsistencyError("petal around " + full(j).lo.str() + " collapses to a point");
    }
    petals.push_back(petal);
  }
  return Flower(std::move(petals), 2);
}

Flower flower_from_orbit(const PeriodicOrbit& orbit) {
  if (orbit.d != 2) throw ValidationError("canonical flowers are built for the doubling map only");
  if (orbit.is_fixed_point()) {
    throw ValidationError("the fixed point 0 lies in no flower avoiding 0");
  }
  enum class Side { Orbit, Anti };
  std::vector<LabeledPoint<Side>> pts;
  for (const CirclePoint& x : orbit.points) {
    pts.push_back({x, Side::Orbit});
    pts.push_back({antipode(x), Side::Anti});
  }
  const auto sorted = circular_sort(std::move(pts));
  if (sorted.has_duplicates()) throw ConsistencyError("orbit " + orbit.word.str() + " meets its antiorbit");
  const auto& e = sorted.entries;
  const std::size_t n = e.size();

  // Rotate so that index 0 starts an orbit block.
  std::size_t start = 0;
  while (!(e[start].label == Side::Orbit && e[(start + n - 1) % n].label == Side::Anti)) ++start;

  std::vector<HullSpan> blocks;
  for (std::size_t k = 0; k < n;) {
    const std::size_t first = (start + k) % n;
    std::size_t len = 1;
    while (k + len < n && e[(start + k + len) % n].label == e[first].label) ++len;
    const std::size_t last = (start + k + len - 1) % n;
    blocks.push_back(HullSpan{e[first].point, forward_distance(e[first].point, e[last].point)});
    k += len;
  }
  const std::size_t p = blocks.size() / 2;
  blocks.resize(p);
  Flower flower = flower_from_hull_sequence(blocks);

  for (const CirclePoint& x : orbit.points) {
    if (!flower.contains_interior(x)) {
      throw ConsistencyError("orbit point " + x.str() + " is not interior to the canonical flower");
    }
  }
  if (flower.contains(CirclePoint())) {
    throw ConsistencyError("canonical flower of " + orbit.word.str() + " contains 0");
  }
  return flower;
}

std::size_t complexity_adic(std::span<const CirclePoint> Y, int d, int n) {
  if (n < 0) throw ValidationError("complexity_adic needs n >= 0");
  require_forward_invariant(Y, d);
  const Integer scale = ipow(d, static_cast<unsigned>(n));
  std::set<Integer> cells;
  for (const CirclePoint& y : Y) {
    Integer cell;
    const Integer num = y.value().numerator() * scale;
    mpz_fdiv_q(cell.get_mpz_t(), num.get_mpz_t(), y.value().denominator().get_mpz_t());
    cells.insert(cell);
  }
  return cells.size();
}

}  // namespace flowers
