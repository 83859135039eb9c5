#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "flowers/ergopt.hpp"

using namespace flowers;

namespace {

TrigPoly random_poly(std::mt19937_64& rng, int max_k) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TrigPoly f;
  for (int k = 1; k <= max_k; ++k) f.add(k, u(rng), u(rng));
  return f;
}

// Exhaustive oracle: integrate every orbit pointwise and apply the tie rule.
std::pair<std::string, double> brute_argmax(const TrigPoly& f, int max_period) {
  const auto orbits = enumerate_orbits(2, max_period);
  std::vector<double> v;
  for (const auto& o : orbits) v.push_back(integrate_orbit(f, o));
  const double best = *std::max_element(v.begin(), v.end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] >= best - kTieTolerance) return {orbits[j].word.str(), v[j]};
  }
  return {};
}

}  // namespace

TEST(TrigPoly, Eval) {
  const TrigPoly cos1{{1, {1.0, 0.0}}};
  EXPECT_DOUBLE_EQ(eval(cos1, CirclePoint()), 1.0);
  EXPECT_DOUBLE_EQ(eval(cos1, CirclePoint(1, 2)), -1.0);
  EXPECT_DOUBLE_EQ(eval(TrigPoly{}, CirclePoint(1, 3)), 0.0);
  const TrigPoly sin3{{3, {0.0, 2.0}}};
  EXPECT_NEAR(sin3(CirclePoint(1, 12)), 2.0, 1e-15);
  EXPECT_NEAR(sin3(1.0 / 12), 2.0, 1e-15);
  EXPECT_THROW(TrigPoly().add(0, 1.0, 0.0), ValidationError);
}

TEST(TrigPoly, ReduceToOdd) {
  EXPECT_EQ(reduce_to_odd(TrigPoly{{2, {1.0, 0.0}}}).terms(), (TrigPoly{{1, {1.0, 0.0}}}).terms());
  EXPECT_EQ(reduce_to_odd(TrigPoly{{4, {0.0, 1.0}}}).terms(), (TrigPoly{{1, {0.0, 1.0}}}).terms());
  EXPECT_EQ(reduce_to_odd(TrigPoly{{3, {1.0, 1.0}}}).terms(), (TrigPoly{{3, {1.0, 1.0}}}).terms());
  const auto g = reduce_to_odd(TrigPoly{{1, {1.0, 0.0}}, {2, {0.5, 0.0}}, {6, {0.0, 1.0}}});
  EXPECT_EQ(g.terms(), (TrigPoly{{1, {1.5, 0.0}}, {3, {0.0, 1.0}}}).terms());
}

TEST(Integrate, Examples) {
  const TrigPoly cos1{{1, {1.0, 0.0}}};
  EXPECT_DOUBLE_EQ(integrate_orbit(cos1, orbit_from_word(Word::parse("0"), 2)), 1.0);
  EXPECT_NEAR(integrate_orbit(cos1, orbit_from_word(Word::parse("01"), 2)), -0.5, 1e-15);
  EXPECT_DOUBLE_EQ(integrate_orbit(TrigPoly{}, orbit_from_word(Word::parse("0011"), 2)), 0.0);
}

TEST(Integrate, CoboundariesVanish) {
  std::mt19937_64 rng(21);
  const auto orbits = enumerate_orbits(2, 10);
  for (int t = 0; t < 20; ++t) {
    const TrigPoly f = random_poly(rng, 8);
    const TrigPoly g = reduce_to_odd(f);
    for (const auto& o : orbits) EXPECT_NEAR(integrate_orbit(f, o), integrate_orbit(g, o), 1e-9);
  }
}

TEST(Catalog, MatchesPointwiseIntegration) {
  const OrbitCatalog cat(10, 5);
  auto orbits = enumerate_orbits(2, 10);
  ASSERT_EQ(orbits[1].word.str(), "1");
  orbits.erase(orbits.begin() + 1);  // same fixed point as "0"
  ASSERT_EQ(cat.size(), orbits.size());
  std::mt19937_64 rng(22);
  std::vector<double> out;
  for (int t = 0; t < 10; ++t) {
    const TrigPoly f = random_poly(rng, 5);
    cat.integrals(f, out);
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      EXPECT_EQ(cat.word(j), orbits[j].word);
      EXPECT_NEAR(out[j], integrate_orbit(f, orbits[j]), 1e-12);
    }
  }
  EXPECT_THROW(cat.integrals(TrigPoly{{6, {1.0, 0.0}}}, out), ValidationError);
}

TEST(Maximizer, CosineAndZero) {
  const auto m = pseudo_maximizer(TrigPoly{{1, {1.0, 0.0}}}, 14);
  EXPECT_EQ(m.word.str(), "0");
  EXPECT_DOUBLE_EQ(m.value, 1.0);
  EXPECT_FALSE(m.tie);
  const auto z = pseudo_maximizer(TrigPoly{}, 14);
  EXPECT_EQ(z.word.str(), "0");
  EXPECT_EQ(z.value, 0.0);
  EXPECT_TRUE(z.tie);
}

TEST(Maximizer, AgreesWithExhaustiveScan) {
  std::mt19937_64 rng(23);
  const OrbitCatalog cat(10, 3);
  for (int t = 0; t < 30; ++t) {
    const TrigPoly f = t == 0 ? TrigPoly{{1, {-1.0, 0.0}}} : random_poly(rng, 3);
    const auto m = pseudo_maximizer(cat, f);
    const auto [word, value] = brute_argmax(f, 10);
    EXPECT_EQ(m.word.str(), word);
    EXPECT_NEAR(m.value, value, 1e-12);
  }
}

TEST(Maximizer, InvariantUnderPositiveScaling) {
  std::mt19937_64 rng(24);
  const OrbitCatalog cat(12, 3);
  for (int t = 0; t < 30; ++t) {
    const TrigPoly f = random_poly(rng, 3);
    for (double c : {0.5, 3.0, 17.25}) EXPECT_EQ(pseudo_maximizer(cat, f.scaled(c)).word, pseudo_maximizer(cat, f).word);
  }
}

TEST(Sphere, UnitNormOddFrequencies) {
  auto rng = sample_stream(1, 0);
  for (int degree : {1, 3, 5, 7}) {
    const TrigPoly f = sample_sphere(degree, rng);
    double n2 = 0.0;
    std::size_t count = 0;
    for (const auto& [k, ab] : f.terms()) {
      EXPECT_EQ(k % 2, 1);
      n2 += ab.first * ab.first + ab.second * ab.second;
      count += 2;
    }
    EXPECT_EQ(count, static_cast<std::size_t>(degree + 1));
    EXPECT_NEAR(std::sqrt(n2), 1.0, 1e-12);
  }
  EXPECT_THROW(sample_sphere(2, rng), ValidationError);
}

TEST(Sphere, StreamsAreDeterministic) {
  auto a = sample_stream(42, 7);
  auto b = sample_stream(42, 7);
  auto c = sample_stream(42, 8);
  const auto fa = sample_sphere(3, a);
  EXPECT_EQ(fa.terms(), sample_sphere(3, b).terms());
  EXPECT_NE(fa.terms(), sample_sphere(3, c).terms());
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
  ExperimentConfig cfg;
  cfg.degree = 3;
  cfg.samples = 200;
  cfg.max_period = 10;
  cfg.seed = 99;
  cfg.threads = 1;
  const auto one = run_experiment(cfg);
  cfg.threads = 4;
  const auto four = run_experiment(cfg);
  EXPECT_EQ(one.tally, four.tally);
  std::ostringstream s1;
  std::ostringstream s4;
  write_experiment_csv(s1, one);
  write_experiment_csv(s4, four);
  EXPECT_EQ(s1.str(), s4.str());
  std::size_t total = 0;
  for (const auto& [n, c] : one.tally) total += c;
  EXPECT_EQ(total, 200u);
}

TEST(Experiment, RandomSamplesHaveNoTies) {
  ExperimentConfig cfg;
  cfg.degree = 5;
  cfg.samples = 300;
  cfg.max_period = 12;
  for (const auto& s : run_experiment(cfg).samples) EXPECT_FALSE(s.maximizer.tie) << "sample " << s.id;
}

TEST(Experiment, CsvLayout) {
  ExperimentConfig cfg;
  cfg.degree = 3;
  cfg.samples = 2;
  cfg.max_period = 6;
  const auto r = run_experiment(cfg);
  std::ostringstream os;
  write_experiment_csv(os, r);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "sample_id,a1,b1,a3,b3,argmax_word,integral,interlacing,tie");
  std::string row;
  std::getline(in, row);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
}

TEST(Experiment, RejectsBadConfig) {
  ExperimentConfig cfg;
  cfg.degree = 4;
  EXPECT_THROW(run_experiment(cfg), ValidationError);
  cfg.degree = 3;
  cfg.samples = 0;
  EXPECT_THROW(run_experiment(cfg), ValidationError);
}
