#include "flowers/orbits.hpp"

#include <algorithm>
#include <unordered_set>

namespace flowers {

PeriodicOrbit orbit_from_word(const Word& w, int d) {
  if (w.alphabet() != d) throw ValidationError("word alphabet does not match d = " + std::to_string(d));
  const auto p = static_cast<unsigned>(w.size());
  const Integer denominator = ipow(d, p) - 1;
  CirclePoint x(Rational(w.as_integer(), denominator));

  PeriodicOrbit orbit{w, {}, d};
  orbit.points.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && x == orbit.points.front()) break;  // non-primitive or degenerate word
    orbit.points.push_back(x);
    x = expand(x, d);
  }
  if (x != orbit.points.front()) throw ConsistencyError("orbit of " + w.str() + " did not close");
  return orbit;
}

std::vector<PeriodicOrbit> enumerate_orbits(int d, int max_period) {
  std::vector<PeriodicOrbit> out;
  for (const Word& w : enumerate_lyndon(d, max_period)) out.push_back(orbit_from_word(w, d));
  return out;
}

int interlacing_number(const PeriodicOrbit& orbit) {
  if (orbit.d != 2) throw ValidationError("interlacing numbers are defined for the doubling map only");
  enum class Side { Orbit, Anti };
  std::vector<LabeledPoint<Side>> pts;
  pts.reserve(2 * orbit.points.size());
  for (const CirclePoint& x : orbit.points) {
    pts.push_back({x, Side::Orbit});
    pts.push_back({antipode(x), Side::Anti});
  }
  const auto sorted = circular_sort(std::move(pts));
  if (sorted.has_duplicates()) {
    throw ConsistencyError("orbit " + orbit.word.str() + " meets its antiorbit");
  }
  const auto& e = sorted.entries;
  int blocks = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& prev = e[(i + e.size() - 1) % e.size()];
    if (e[i].label == Side::Orbit && prev.label == Side::Anti) ++blocks;
  }
  return blocks;
}

std::map<int, TallyEntry> interlacing_tally(int max_period) {
  if (max_period < 1) throw ValidationError("max_period must be >= 1");
  std::map<int, TallyEntry> tally;
  // enumerate_lyndon is already in (period, lexicographic) order, so the
  // first word seen per class is the simplest one.
  for (const Word& w : enumerate_lyndon(2, max_period)) {
    const int n = interlacing_number(orbit_from_word(w, 2));
    auto [it, inserted] = tally.try_emplace(n, TallyEntry{0, w});
    ++it->second.count;
  }
  return tally;
}

void require_forward_invariant(std::span<const CirclePoint> K, int d) {
  const std::unordered_set<CirclePoint> members(K.begin(), K.end());
  for (const CirclePoint& x : K) {
    if (!members.contains(expand(x, d))) {
      throw ValidationError("set is not forward invariant: E_" + std::to_string(d) + "(" + x.str() + ") = " +
                            expand(x, d).str() + " is missing");
    }
  }
}

std::vector<CirclePoint> critical_points(std::span<const CirclePoint> K, int d) {
  require_forward_invariant(K, d);
  const std::unordered_set<CirclePoint> members(K.begin(), K.end());
  std::vector<CirclePoint> out;
  for (const CirclePoint& x : members) {
    int preimages = 0;
    for (int i = 0; i < d; ++i) {
      if (members.contains(CirclePoint((x.value() + Rational(i)) / Rational(d)))) ++preimages;
    }
    if (preimages > 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flowers
