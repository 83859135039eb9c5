// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flowers/bridge.hpp"
#include "flowers/ergopt.hpp"
#include "flowers/flower.hpp"
#include "flowers/iet.hpp"
#include "flowers/orbits.hpp"
#include "flowers/symbolic.hpp"

using namespace flowers;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

Rational r(long p, long q) { return Rational(p, q); }

Outcome orbit_census() {
  Outcome out;
  const auto words = enumerate_lyndon(2, 14);
  if (words.size() != 2538) out.fail("enumerate_lyndon(2,14) gave " + std::to_string(words.size()));
  const std::map<int, std::pair<std::size_t, std::string>> expected{
      {1, {65, "0"}},        {3, {470, "0011"}},        {5, {1006, "0001101"}},
      {7, {742, "000100111"}}, {9, {227, "0001011101"}}, {11, {28, "000100111011"}}};
  const auto tally = interlacing_tally(14);
  if (tally.size() != expected.size()) out.fail("tally has " + std::to_string(tally.size()) + " classes");
  for (const auto& [n, entry] : tally) {
    const auto it = expected.find(n);
    if (it == expected.end() || it->second.first != entry.count || it->second.second != entry.simplest.str()) {
      out.fail("class " + std::to_string(n) + ": " + std::to_string(entry.count) + " orbits, simplest " +
               entry.simplest.str());
    }
  }
  if (out.pass) out.detail = "2538 orbits; 65/470/1006/742/227/28";
  return out;
}

Outcome example_one() {
  Outcome out;
  const auto g = h_graph(deck_shuffler({r(2, 5), r(1, 5), r(1, 5), r(1, 5)}));
  std::vector<Rational> values;
  for (const auto& p : g.plateaus) {
    values.push_back(p.value);
    if (p.period != 5) out.fail("plateau at " + p.lo.str() + " has period " + std::to_string(p.period));
  }
  const std::vector<Rational> expected{r(3, 31), r(6, 31), r(12, 31), r(17, 31), r(24, 31)};
  if (values != expected) out.fail("plateau values differ");
  if (out.pass) out.detail = "values 3/31 6/31 12/31 17/31 24/31, period 5";
  return out;
}

Outcome example_two() {
  Outcome out;
  const auto T = deck_shuffler({r(3, 10), r(2, 10), r(2, 10), r(3, 10)});
  const auto g = h_graph(T);
  const std::vector<Rational> expected{r(1, 9), r(1, 5), r(2, 9), r(2, 5), r(4, 9),
                                       r(5, 9), r(3, 5), r(7, 9), r(4, 5), r(8, 9)};
  std::vector<Rational> values;
  for (const auto& p : g.plateaus) {
    values.push_back(p.value);
    const std::size_t want = p.value.denominator() == 5 ? 4 : 6;
    if (p.period != want) out.fail("plateau " + p.value.str() + " has period " + std::to_string(p.period));
  }
  if (values != expected) out.fail("plateau values differ");
  const IetFlower f = flower_from_iet(T);
  if (f.flower.size() != 3 || !validate_flower(f.flower).empty()) out.fail("flower is not a valid 3-flower");
  for (const Rational& v : expected) {
    if (!f.flower.contains(CirclePoint(v))) out.fail("flower misses " + v.str());
  }
  if (out.pass) out.detail = "ten plateaus, periods 4/6, one valid 3-flower";
  return out;
}

Outcome example_three() {
  Outcome out;
  const int depth = 60;
  const Real b = (boost::multiprecision::sqrt(Real(5)) - 1) / 8;
  const Real a = Real(0.5) - 2 * b;
  const RealDeckShuffler T({a, b + Real(0.25), b, Real(0.25)});
  const Real tol58 = boost::multiprecision::ldexp(Real(1), -58);
  const Real tol40 = boost::multiprecision::ldexp(Real(1), -40);

  // Period-2 component: [1/2 - b, 3/4 - b) in A_2 and B_2 = [3/4, 1).
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Real worst = 0;
  for (int i = 0; i < 200; ++i) {
    const Real t(u(rng));
    const Real x1 = Real(0.5) - b + t * Real(0.25);
    const Real x2 = Real(0.75) + t * Real(0.25);
    worst = std::max(worst, boost::multiprecision::abs(ab_coding(T, x1, depth).value - Real(1) / 3));
    worst = std::max(worst, boost::multiprecision::abs(ab_coding(T, x2, depth).value - Real(2) / 3));
  }
  if (worst > tol58) out.fail("period-2 values off by " + worst.str(6));

  // Complementary component: [0, 1/2 - b) u [3/4 - b, 3/4).
  std::vector<Word> codings;
  for (int i = 0; i < 400; ++i) {
    const Real t(u(rng));
    const Real x = i % 2 == 0 ? t * (Real(0.5) - b) : Real(0.75) - b + t * b;
    codings.emplace_back(ab_coding(T, x, depth).prefix, 2);
  }
  std::size_t sturmian_bad = 0;
  for (int n = 1; n <= 12; ++n) {
    if (factor_complexity(codings, n) > static_cast<std::size_t>(n + 1)) ++sturmian_bad;
  }
  if (sturmian_bad) out.fail(std::to_string(sturmian_bad) + " lengths exceed n+1 factors");

  const IetFlower f = flower_from_iet(T, depth);
  if (f.flower.size() != 3 || !validate_flower(f.flower).empty()) out.fail("not a valid 3-flower");
  const auto& petals = f.flower.petals();
  const auto smallest =
      std::min_element(petals.begin(), petals.end(), [](const Arc& x, const Arc& y) { return x.length() < y.length(); });
  const Rational tol = to_rational(tol40);
  const Arc widened{smallest->left - tol, smallest->right + tol};
  if (!widened.contains(CirclePoint(2, 3))) out.fail("smallest petal misses 2/3");
  if (out.pass) {
    std::ostringstream msg;
    msg << "max |H - 1/3, 2/3| = " << worst.str(3) << ", Sturmian n<=12, smallest petal ["
        << smallest->left.to_double() << ", " << smallest->right.to_double() << "]";
    out.detail = msg.str();
  }
  return out;
}

Outcome round_trips() {
  Outcome out;
  std::vector<PeriodicOrbit> orbits;
  for (auto& o : enumerate_orbits(2, 14)) {
    if (!o.is_fixed_point()) orbits.push_back(std::move(o));
  }
  const auto reports = round_trip_batch(orbits, worker_count());
  std::size_t failures = 0;
  for (const auto& rep : reports) {
    if (!rep.ok()) {
      if (failures == 0) out.fail(rep.word.str() + ": " + rep.failures.front());
      ++failures;
    }
  }
  if (failures) out.detail += " (" + std::to_string(failures) + " failures)";
  if (out.pass) out.detail = std::to_string(reports.size()) + " orbits, zero failures";
  return out;
}

Outcome complexity_bound() {
  Outcome out;
  std::size_t violations = 0;
  for (const auto& o : enumerate_orbits(2, 14)) {
    const long p = interlacing_number(o);
    std::vector<long> C;
    for (int n = 0; n <= 15; ++n) C.push_back(static_cast<long>(complexity_adic(o.points, 2, n)));
    for (int n = 0; n <= 14; ++n) {
      if (C[n + 1] - C[n] > p) {
        ++violations;
        out.fail(o.word.str() + ": C(" + std::to_string(n + 1) + ") - C(" + std::to_string(n) + ") > " +
                 std::to_string(p));
      }
      if (n >= 1 && C[n] > p * n + C[1]) {
        ++violations;
        out.fail(o.word.str() + ": C(" + std::to_string(n) + ") > p n + C(1)");
      }
    }
  }
  if (out.pass) out.detail = "zero violations over 2538 orbits";
  else out.detail += " (" + std::to_string(violations) + " violations)";
  return out;
}

Outcome sturmian_equivalence() {
  Outcome out;
  std::size_t violations = 0;
  std::size_t sturmian = 0;
  for (const auto& o : enumerate_orbits(2, 14)) {
    const bool one = interlacing_number(o) == 1;
    const bool st = is_sturmian_complexity(SymbolicOrbitSet({o.word}, 2), static_cast<int>(o.period()) + 1);
    sturmian += st ? 1 : 0;
    if (one != st) {
      ++violations;
      out.fail(o.word.str() + ": interlacing 1 is " + (one ? "true" : "false") + ", Sturmian is " +
               (st ? "true" : "false"));
    }
  }
  if (out.pass) out.detail = std::to_string(sturmian) + " Sturmian orbits, all with interlacing 1";
  else out.detail += " (" + std::to_string(violations) + " violations)";
  return out;
}

Outcome monotone_intertwining() {
  Outcome out;
  std::mt19937_64 rng(2024);
  std::size_t violations = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t m = 1 + rng() % 4;
    const long q = static_cast<long>(2 * m) + static_cast<long>(rng() % (61 - 2 * m));
    std::set<long> cuts;
    while (cuts.size() + 1 < 2 * m) cuts.insert(1 + static_cast<long>(rng() % (q - 1)));
    std::vector<Rational> lengths;
    long prev = 0;
    for (long c : cuts) {
      lengths.emplace_back(c - prev, q);
      prev = c;
    }
    lengths.emplace_back(q - prev, q);
    const DeckShuffler T(lengths);
    std::uniform_int_distribution<long> num(0, 1'000'000 - 1);
    for (int i = 0; i < 100; ++i) {
      Rational x(num(rng), 1'000'000);
      Rational y(num(rng), 1'000'000);
      if (y < x) std::swap(x, y);
      if (x == y) continue;
      const Rational hx = ab_coding(T, x).value;
      const Rational hy = ab_coding(T, y).value;
      if (hx > hy) {
        ++violations;
        out.fail("H(" + x.str() + ") > H(" + y.str() + ")");
      }
      if (ab_coding(T, T.apply(x)).value != (hx * Rational(2)).frac()) {
        ++violations;
        out.fail("H(T " + x.str() + ") != 2 H(x) mod 1");
      }
    }
  }
  if (out.pass) out.detail = "500 shufflers x 100 pairs, zero violations";
  else out.detail += " (" + std::to_string(violations) + " violations)";
  return out;
}

Outcome ergodic_optimization() {
  Outcome out;
  auto run = [&](int degree, std::size_t samples) {
    ExperimentConfig cfg;
    cfg.degree = degree;
    cfg.samples = samples;
    cfg.max_period = 14;
    cfg.seed = 42;
    cfg.threads = worker_count();
    return run_experiment(cfg);
  };
  std::ostringstream msg;
  const auto d3 = run(3, 5000);
  const double frac3 = d3.tally.contains(3) ? static_cast<double>(d3.tally.at(3)) / 5000.0 : 0.0;
  for (const auto& [n, c] : d3.tally) {
    if (n > 3) out.fail("degree 3: " + std::to_string(c) + " maximizers with interlacing " + std::to_string(n));
  }
  if (frac3 < 0.15 || frac3 > 0.30) out.fail("degree 3: interlacing-3 fraction " + std::to_string(frac3));
  const auto d5 = run(5, 1000);
  for (const auto& [n, c] : d5.tally) {
    if (n > 5) out.fail("degree 5: " + std::to_string(c) + " maximizers with interlacing " + std::to_string(n));
  }
  const auto d1 = run(1, 1000);
  for (const auto& [n, c] : d1.tally) {
    if (n != 1) out.fail("degree 1: " + std::to_string(c) + " maximizers with interlacing " + std::to_string(n));
  }
  msg << "deg3 fraction(3) = " << frac3 << "; deg5 tally";
  for (const auto& [n, c] : d5.tally) msg << ' ' << n << ':' << c;
  if (out.pass) out.detail = msg.str();
  return out;
}

Outcome cohomology() {
  Outcome out;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto orbits = enumerate_orbits(2, 10);
  double worst = 0.0;
  std::size_t violations = 0;
  for (int t = 0; t < 200; ++t) {
    TrigPoly f;
    const int degree = 2 + static_cast<int>(rng() % 11);
    for (int k = 1; k <= degree; ++k) f.add(k, u(rng), u(rng));
    f.add(2 * (1 + static_cast<int>(rng() % 4)), u(rng), u(rng));
    const TrigPoly g = reduce_to_odd(f);
    for (const auto& o : orbits) {
      const double d = std::abs(integrate_orbit(f, o) - integrate_orbit(g, o));
      worst = std::max(worst, d);
      if (d > 1e-9) ++violations;
    }
  }
  if (violations) out.fail(std::to_string(violations) + " violations, worst " + std::to_string(worst));
  else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst difference %.3g", worst);
    out.detail = buf;
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "orbit census and interlacing tally", 10.0, orbit_census},
      {2, "Example 1 plateaus", 0.0, example_one},
      {3, "Example 2 plateaus and 3-flower", 0.0, example_two},
      {4, "Example 3 bounded precision", 30.0, example_three},
      {5, "round trip up to period 14", 120.0, round_trips},
      {6, "linear complexity bound", 0.0, complexity_bound},
      {7, "Sturmian equivalence", 0.0, sturmian_equivalence},
      {8, "monotonicity and intertwining fuzz", 0.0, monotone_intertwining},
      {9, "ergodic optimization experiment", 300.0, ergodic_optimization},
      {10, "cohomology reduction", 0.0, cohomology},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("%s  AC%-2d %-38s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
