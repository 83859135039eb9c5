#include "flowers/ergopt.hpp"

#include <boost/random/normal_distribution.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>
#include <unordered_set>

namespace flowers {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// frac(k x) as a double, reduced exactly first.
double phase(int k, const CirclePoint& x) {
  Integer num = x.value().numerator() * k;
  const Integer& den = x.value().denominator();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r.get_d() / den.get_d();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TrigPoly::TrigPoly(std::initializer_list<std::pair<const int, std::pair<double, double>>> terms) {
  for (const auto& [k, ab] : terms) add(k, ab.first, ab.second);
}

void TrigPoly::add(int k, double a, double b) {
  if (k < 1) throw ValidationError("trigonometric frequencies must be >= 1, got " + std::to_string(k));
  auto& c = terms_[k];
  c.first += a;
  c.second += b;
}

double TrigPoly::operator()(double x) const {
  double sum = 0.0;
  for (const auto& [k, ab] : terms_) {
    const double t = kTwoPi * k * x;
    sum += ab.first * std::cos(t) + ab.second * std::sin(t);
  }
  return sum;
}

double TrigPoly::operator()(const CirclePoint& x) const {
  double sum = 0.0;
  for (const auto& [k, ab] : terms_) {
    const double t = kTwoPi * phase(k, x);
    sum += ab.first * std::cos(t) + ab.second * std::sin(t);
  }
  return sum;
}

TrigPoly TrigPoly::scaled(double c) const {
  TrigPoly out;
  for (const auto& [k, ab] : terms_) out.add(k, c * ab.first, c * ab.second);
  return out;
}

double eval(const TrigPoly& f, const CirclePoint& x) { return f(x); }

TrigPoly reduce_to_odd(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [k, ab] : f.terms()) {
    int j = k;
    while (j % 2 == 0) j /= 2;
    out.add(j, ab.first, ab.second);
  }
  return out;
}

double integrate_orbit(const TrigPoly& f, const PeriodicOrbit& orbit) {
  double sum = 0.0;
  for (const CirclePoint& x : orbit.points) sum += f(x);
  return sum / static_cast<double>(orbit.points.size());
}

OrbitCatalog::OrbitCatalog(int max_period, int max_frequency)
    : max_period_(max_period), max_frequency_(max_frequency) {
  if (max_period < 1) throw ValidationError("max_period must be >= 1");
  if (max_frequency < 0) throw ValidationError("max_frequency must be >= 0");
  // The words 0 and 1 code the same fixed point; keep one copy of each orbit.
  std::vector<PeriodicOrbit> orbits;
  std::unordered_set<CirclePoint> seen;
  for (auto& o : enumerate_orbits(2, max_period)) {
    if (seen.contains(o.points.front())) continue;
    seen.insert(o.points.begin(), o.points.end());
    orbits.push_back(std::move(o));
  }
  const std::size_t n = orbits.size();
  words_.reserve(n);
  interlacing_.reserve(n);
  table_.assign(2 * static_cast<std::size_t>(max_frequency) * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& o = orbits[j];
    words_.push_back(o.word);
    interlacing_.push_back(interlacing_number(o));
    const double inv = 1.0 / static_cast<double>(o.points.size());
    for (int k = 1; k <= max_frequency; ++k) {
      double c = 0.0;
      double s = 0.0;
      for (const CirclePoint& x : o.points) {
        const double t = kTwoPi * phase(k, x);
        c += std::cos(t);
        s += std::sin(t);
      }
      table_[(2 * static_cast<std::size_t>(k - 1)) * n + j] = c * inv;
      table_[(2 * static_cast<std::size_t>(k - 1) + 1) * n + j] = s * inv;
    }
  }
}

const double* OrbitCatalog::moments(int k, bool sine) const {
  if (k < 1 || k > max_frequency_) throw ValidationError("frequency " + std::to_string(k) + " is not in the catalog");
  return table_.data() + (2 * static_cast<std::size_t>(k - 1) + (sine ? 1 : 0)) * size();
}

void OrbitCatalog::integrals(const TrigPoly& f, std::vector<double>& out, simd::Isa isa) const {
  std::vector<const double*> rows;
  std::vector<double> coeffs;
  for (const auto& [k, ab] : f.terms()) {
    if (ab.first != 0.0) {
      rows.push_back(moments(k, false));
      coeffs.push_back(ab.first);
    }
    if (ab.second != 0.0) {
      rows.push_back(moments(k, true));
      coeffs.push_back(ab.second);
    }
  }
  out.resize(size());
  simd::weighted_sum(isa, rows.data(), coeffs.data(), rows.size(), size(), out.data());
}

Maximizer pseudo_maximizer(const OrbitCatalog& catalog, const TrigPoly& f) {
  std::vector<double> values;
  catalog.integrals(f, values);
  double best = values.front();
  for (double v : values) best = std::max(best, v);
  Maximizer m;
  std::size_t near = 0;
  bool chosen = false;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] >= best - kTieTolerance) {
      ++near;
      if (!chosen) {
        chosen = true;
        m.index = j;
      }
    }
  }
  m.word = catalog.word(m.index);
  m.value = values[m.index];
  m.interlacing = catalog.interlacing(m.index);
  m.tie = near > 1;
  return m;
}

Maximizer pseudo_maximizer(const TrigPoly& f, int max_period) {
  return pseudo_maximizer(OrbitCatalog(max_period, std::max(1, f.max_frequency())), f);
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

TrigPoly sample_sphere(int degree, std::mt19937_64& rng) {
  if (degree < 1 || degree % 2 == 0) throw ValidationError("degree must be odd and >= 1");
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v;
  for (int k = 1; k <= degree; k += 2) {
    v.push_back(normal(rng));
    v.push_back(normal(rng));
  }
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  const double inv = 1.0 / std::sqrt(norm2);
  TrigPoly f;
  for (int k = 1, i = 0; k <= degree; k += 2, i += 2) f.add(k, v[i] * inv, v[i + 1] * inv);
  return f;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.degree < 1 || cfg.degree % 2 == 0) throw ValidationError("degree must be odd and >= 1");
  if (cfg.samples < 1) throw ValidationError("samples must be >= 1");
  const OrbitCatalog catalog(cfg.max_period, cfg.degree);
  ExperimentResult result;
  result.config = cfg;
  result.samples.resize(cfg.samples);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.samples; i = next++) {
      auto rng = sample_stream(cfg.seed, i);
      SampleRecord& rec = result.samples[i];
      rec.id = i;
      rec.f = sample_sphere(cfg.degree, rng);
      rec.maximizer = pseudo_maximizer(catalog, rec.f);
    }
  };
  const unsigned threads = std::max(1u, cfg.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& rec : result.samples) ++result.tally[rec.maximizer.interlacing];
  return result;
}

void write_experiment_csv(std::ostream& os, const ExperimentResult& result) {
  os << "sample_id";
  for (int k = 1; k <= result.config.degree; k += 2) os << ",a" << k << ",b" << k;
  os << ",argmax_word,integral,interlacing,tie\n";
  for (const auto& rec : result.samples) {
    os << rec.id;
    for (int k = 1; k <= result.config.degree; k += 2) {
      const auto it = rec.f.terms().find(k);
      const auto ab = it == rec.f.terms().end() ? std::pair<double, double>{0.0, 0.0} : it->second;
      os << ',' << format_double(ab.first) << ',' << format_double(ab.second);
    }
    os << ',' << rec.maximizer.word.str() << ',' << format_double(rec.maximizer.value) << ','
       << rec.maximizer.interlacing << ',' << (rec.maximizer.tie ? 1 : 0) << '\n';
  }
}

}  // namespace flowers
