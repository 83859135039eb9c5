#include "flowers/bridge.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace flowers {

namespace {

std::string arc_str(const Arc& a) { return "[" + a.left.str() + ", " + a.right.str() + "]"; }

}  // namespace

OrbitMeasure OrbitMeasure::uniform(PeriodicOrbit orbit) {
  if (orbit.points.empty()) throw ValidationError("orbit has no points");
  return OrbitMeasure{std::move(orbit)};
}

Rational CdfMap::h(const CirclePoint& x) const {
  const auto it = std::upper_bound(support_.begin(), support_.end(), x,
                                   [](const CirclePoint& v, const auto& e) { return v < e.first; });
  return weight_ * Rational(static_cast<long>(it - support_.begin()));
}

Rational CdfMap::h_left(const CirclePoint& x) const {
  const auto it = std::lower_bound(support_.begin(), support_.end(), x,
                                   [](const auto& e, const CirclePoint& v) { return e.first < v; });
  return weight_ * Rational(static_cast<long>(it - support_.begin()));
}

Rational CdfMap::mass(const Arc& petal) const {
  long n = 0;
  for (const auto& [x, hx] : support_) {
    if (petal.contains(x)) ++n;
  }
  return weight_ * Rational(n);
}

CdfMap cdf(const OrbitMeasure& mu, const Flower& F) {
  if (F.d() != 2) throw ValidationError("flower-supported CDFs are built for the doubling map only");
  require_valid_flower(F);
  if (F.contains(CirclePoint())) {
    throw ValidationError("flower contains 0: a petal with positive mass through 0 forces an atom at 0");
  }
  CdfMap map(F, mu.weight());
  std::vector<CirclePoint> pts = mu.orbit.points;
  std::sort(pts.begin(), pts.end());
  for (const CirclePoint& x : pts) {
    if (!F.contains_interior(x)) {
      throw ValidationError("orbit point " + x.str() + " is not in the interior of a petal");
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    map.support_.emplace_back(pts[i], mu.weight() * Rational(static_cast<long>(i + 1)));
  }
  for (const Arc& p : F.petals()) {
    if (map.mass(p).is_zero()) {
      throw ValidationError("petal " + arc_str(p) + " carries no mass; remove it and use the smaller flower");
    }
    map.endpoints_.emplace_back(p.left, map.h(p.left));
    map.endpoints_.emplace_back(p.right, map.h(p.right));
  }
  return map;
}

DeckShuffler iet_from_flower(const OrbitMeasure& mu, const Flower& F) {
  const CdfMap map = cdf(mu, F);
  const auto& petals = F.petals();
  if (petals.size() % 2 == 0) throw ValidationError("flower has an even number of petals");
  const std::size_t m = (petals.size() + 1) / 2;
  const Arc& middle = petals[m - 1];
  const CirclePoint half(1, 2);
  if (!middle.contains(half)) {
    throw ValidationError("petal " + std::to_string(m) + " = " + arc_str(middle) + " does not contain 1/2");
  }

  std::vector<Rational> lengths;
  for (std::size_t i = 0; i + 1 < m; ++i) lengths.push_back(map.mass(petals[i]));
  // P_m n [0, 1/2) and P_m n [1/2, 1); the petal does not wrap since 0 is not in F.
  lengths.push_back(map.h_left(half) - map.h_left(middle.left));
  lengths.push_back(map.h(middle.right) - map.h_left(half));
  for (std::size_t i = m; i < petals.size(); ++i) lengths.push_back(map.mass(petals[i]));

  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (lengths[k].is_zero()) {
      const std::string name = k < m ? "A_" + std::to_string(k + 1) : "B_" + std::to_string(k - m + 1);
      throw ValidationError("interval " + name + " has zero length: petal " + std::to_string(m) +
                            " carries mass on one side of 1/2 only");
    }
  }
  return DeckShuffler(std::move(lengths));
}

RoundTripReport round_trip(const PeriodicOrbit& orbit) {
  if (orbit.is_fixed_point()) throw ValidationError("round trip needs a non-fixed orbit");
  RoundTripReport report;
  report.word = orbit.word;
  report.interlacing = interlacing_number(orbit);
  report.flower = flower_from_orbit(orbit);
  const OrbitMeasure mu = OrbitMeasure::uniform(orbit);
  const DeckShuffler T = iet_from_flower(mu, report.flower);
  report.lengths = T.lengths();
  const CdfMap map = cdf(mu, report.flower);

  report.conjugacy = true;
  report.inverse_coding = true;
  for (const CirclePoint& x : orbit.points) {
    const Rational hx = map.h_left(x);
    const Rational lhs = map.h_left(expand(x, 2));
    const Rational rhs = T.apply(hx);
    const auto k = T.iet().interval_of(hx);
    const bool atom_inside = map.h(x) <= T.iet().start(k + 1);
    if (lhs != rhs || !atom_inside) {
      report.conjugacy = false;
      report.failures.push_back("conjugacy at x = " + x.str() + ": h(E_2 x) = " + lhs.str() + ", T(h(x)) = " +
                                rhs.str() + (atom_inside ? "" : ", atom straddles an interval endpoint"));
    }
    const Rational back = ab_coding(T, hx).value;
    if (back != x.value()) {
      report.inverse_coding = false;
      report.failures.push_back("inverse coding at x = " + x.str() + ": H(h(x)) = " + back.str());
    }
  }

  const IetFlower coded = flower_from_iet(T);
  report.flower_containment = true;
  for (const CirclePoint& x : orbit.points) {
    if (!coded.flower.contains(x)) {
      report.flower_containment = false;
      report.failures.push_back("orbit point " + x.str() + " is outside flower_from_iet(T)");
    }
  }
  return report;
}

std::vector<RoundTripReport> round_trip_batch(std::span<const PeriodicOrbit> orbits, unsigned threads) {
  std::vector<RoundTripReport> out(orbits.size());
  std::vector<std::exception_ptr> errors(orbits.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < orbits.size(); i = next++) {
      try {
        out[i] = round_trip(orbits[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace flowers
