// flower-iet: command-line front end for orbits, flowers, deck shufflers and
// the maximizing-measure experiment.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "flowers/bridge.hpp"
#include "flowers/ergopt.hpp"
#include "flowers/flower.hpp"
#include "flowers/iet.hpp"
#include "flowers/io.hpp"
#include "flowers/orbits.hpp"
#include "flowers/symbolic.hpp"

using namespace flowers;
using io::json;

namespace {

enum class Format { Text, Csv, Json };

struct Options {
  Format out = Format::Text;
  unsigned threads = 1;
  std::string svg;
};

std::string arc_str(const Arc& a) { return "[" + a.left.str() + ", " + a.right.str() + "]"; }

std::string arc_decimal(const Arc& a) {
  std::ostringstream os;
  os.precision(15);
  os << "[" << a.left.to_double() << ", " << a.right.to_double() << "]";
  return os.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string petals_str(const Flower& f) {
  std::vector<std::string> parts;
  for (const Arc& p : f.petals()) parts.push_back(arc_str(p));
  return join(parts, " ");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot write " + path);
  os << content;
}

// Splits a finite E_2-invariant set of plateau values into orbits, each
// listed dynamically from its smallest point.
std::vector<std::vector<Rational>> split_orbits(const std::vector<Rational>& values) {
  std::set<Rational> left(values.begin(), values.end());
  std::vector<std::vector<Rational>> out;
  while (!left.empty()) {
    std::vector<Rational> orbit;
    Rational x = *left.begin();
    while (left.erase(x)) {
      orbit.push_back(x);
      x = (x * Rational(2)).frac();
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

// ---------------------------------------------------------------- tally

void cmd_orbits_tally(const Options& opt, int max_period) {
  const auto tally = interlacing_tally(max_period);
  if (opt.out == Format::Json) {
    json rows = json::array();
    for (const auto& [n, e] : tally) rows.push_back({{"interlacing", n}, {"count", e.count}, {"simplest", e.simplest.str()}});
    std::cout << json{{"max_period", max_period}, {"rows", rows}}.dump(2) << '\n';
    return;
  }
  const bool csv = opt.out == Format::Csv;
  std::cout << (csv ? "interlacing,count,simplest\n" : "interlacing | orbits | simplest\n");
  for (const auto& [n, e] : tally) {
    if (csv) {
      std::cout << n << ',' << e.count << ',' << e.simplest.str() << '\n';
    } else {
      std::cout << n << " | " << e.count << " | " << e.simplest.str() << '\n';
    }
  }
}

// ---------------------------------------------------------------- examples

void report_rational_example(const Options& opt, int number, const std::vector<Rational>& lengths) {
  const DeckShuffler T(lengths);
  const HGraph graph = h_graph(T, 400);
  std::vector<Rational> values;
  for (const auto& p : graph.plateaus) values.push_back(p.value);
  const auto orbits = split_orbits(values);
  const IetFlower f = flower_from_iet(T);

  std::vector<std::string> lens;
  for (const Rational& l : lengths) lens.push_back(l.str());

  if (opt.out == Format::Json) {
    json plateaus = json::array();
    for (const auto& p : graph.plateaus) {
      plateaus.push_back({{"lo", p.lo.str()}, {"hi", p.hi.str()}, {"value", p.value.str()},
                          {"cycle", p.cycle.str()}, {"period", p.period}});
    }
    json orbs = json::array();
    for (const auto& o : orbits) {
      json one = json::array();
      for (const Rational& x : o) one.push_back(x.str());
      orbs.push_back(one);
    }
    std::cout << json{{"example", number}, {"deck_shuffler", io::to_json(T)}, {"plateaus", plateaus},
                      {"orbits", orbs}, {"flower", io::to_json(f.flower)}}
                     .dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "x_lo,x_hi,H,cycle,period\n";
    for (const auto& p : graph.plateaus) {
      std::cout << p.lo.str() << ',' << p.hi.str() << ',' << p.value.str() << ',' << p.cycle.str() << ','
                << p.period << '\n';
    }
  } else {
    std::cout << "Example " << number << ": deck shuffler with lengths " << join(lens, ", ") << "\n\n";
    std::cout << "x | H_l(x) | cycle | period\n";
    for (const auto& p : graph.plateaus) {
      std::cout << "[" << p.lo.str() << ", " << p.hi.str() << ") | " << p.value.str() << " | " << p.cycle.str()
                << " | " << p.period << '\n';
    }
    std::cout << "\nimage of H_l splits into " << orbits.size() << (orbits.size() == 1 ? " orbit" : " orbits")
              << ":\n";
    for (const auto& o : orbits) {
      std::vector<std::string> xs;
      for (const Rational& x : o) xs.push_back(x.str());
      std::cout << "  {" << join(xs, ", ") << "}\n";
    }
    std::cout << "\nflower (" << f.flower.size() << " petals): " << petals_str(f.flower) << '\n';
  }

  if (!opt.svg.empty()) {
    io::SvgMarks marks;
    for (const Rational& v : values) {
      marks.dots.emplace_back(v);
      marks.crosses.push_back(antipode(CirclePoint(v)));
    }
    write_file(opt.svg, io::combined_svg(io::steps_of(graph), f.flower, marks));
  }
}

void report_example_three(const Options& opt, int depth) {
  const Real b = (boost::multiprecision::sqrt(Real(5)) - 1) / 8;
  const Real a = Real(0.5) - 2 * b;
  const RealDeckShuffler T({a, b + Real(0.25), b, Real(0.25)});

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Real err = 0;
  for (int i = 0; i < 100; ++i) {
    const Real t(u(rng));
    err = std::max(err, boost::multiprecision::abs(ab_coding(T, Real(0.5) - b + t / 4, depth).value - Real(1) / 3));
    err = std::max(err, boost::multiprecision::abs(ab_coding(T, Real(0.75) + t / 4, depth).value - Real(2) / 3));
  }
  std::vector<Word> codings;
  for (int i = 0; i < 200; ++i) {
    const Real t(u(rng));
    const Real x = i % 2 == 0 ? t * (Real(0.5) - b) : Real(0.75) - b + t * b;
    codings.emplace_back(ab_coding(T, x, depth).prefix, 2);
  }
  std::vector<std::size_t> complexity;
  for (int n = 1; n <= 12; ++n) complexity.push_back(factor_complexity(codings, n));
  const IetFlower f = flower_from_iet(T, depth);
  const Real bound = boost::multiprecision::ldexp(Real(1), -depth);

  std::vector<std::string> lens;
  for (const Real& l : T.lengths()) lens.push_back(l.str(20));
  std::vector<std::string> cx;
  for (auto c : complexity) cx.push_back(std::to_string(c));

  if (opt.out == Format::Json) {
    json petals = json::array();
    for (const Arc& p : f.flower.petals()) petals.push_back({p.left.to_double(), p.right.to_double()});
    std::cout << json{{"example", 3},
                      {"depth", depth},
                      {"lengths", lens},
                      {"periodic_values", {"1/3", "2/3"}},
                      {"max_error", err.str(3)},
                      {"error_bound", bound.str(3)},
                      {"complexity", complexity},
                      {"petals", petals}}
                     .dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "petal,left,right\n";
    for (std::size_t i = 0; i < f.flower.size(); ++i) {
      std::cout << i << ',' << io::svg_number(f.flower.petals()[i].left.to_double()) << ','
                << io::svg_number(f.flower.petals()[i].right.to_double()) << '\n';
    }
  } else {
    std::cout << "Example 3: b = (sqrt(5) - 1) / 8, a = 1/2 - 2b, lengths (a, b + 1/4, b, 1/4), depth " << depth
              << "\n\n";
    std::cout << "lengths: " << join(lens, ", ") << '\n';
    std::cout << "periodic component [1/2 - b, 3/4 - b) u [3/4, 1): H_l = 1/3 and 2/3, max error " << err.str(3)
              << " (bound " << bound.str(3) << ")\n";
    std::cout << "complementary component, factor complexity n = 1..12: " << join(cx, " ") << '\n';
    std::cout << "flower (" << f.flower.size() << " petals):";
    for (const Arc& p : f.flower.petals()) std::cout << ' ' << arc_decimal(p);
    std::cout << '\n';
  }

  if (!opt.svg.empty()) {
    std::vector<io::Step> steps;
    const int resolution = 400;
    for (int i = 0; i < resolution; ++i) {
      const Real x = (Real(i) + Real(0.5)) / resolution;
      const double y = ab_coding(T, x, depth).value.convert_to<double>();
      steps.push_back(io::Step{static_cast<double>(i) / resolution, static_cast<double>(i + 1) / resolution, y});
    }
    io::SvgMarks marks;
    marks.dots = {CirclePoint(1, 3), CirclePoint(2, 3)};
    marks.crosses = {CirclePoint(5, 6), CirclePoint(1, 6)};
    write_file(opt.svg, io::combined_svg(steps, f.flower, marks));
  }
}

void cmd_example(const Options& opt, int number, int depth) {
  if (number == 1) report_rational_example(opt, 1, {Rational(2, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5)});
  if (number == 2) report_rational_example(opt, 2, {Rational(3, 10), Rational(2, 10), Rational(2, 10), Rational(3, 10)});
  if (number == 3) report_example_three(opt, depth);
}

// ---------------------------------------------------------------- IETs

std::vector<Real> real_lengths(const std::string& text) {
  std::vector<Real> out;
  for (const Rational& r : io::parse_lengths(text)) out.push_back(to_real(r));
  return out;
}

std::string interval_name(std::size_t k, std::size_t m) {
  return k < m ? "A_" + std::to_string(k + 1) : "B_" + std::to_string(k - m + 1);
}

void cmd_iet_code(const Options& opt, const std::string& lengths, const std::string& x_text, int depth, bool real,
                  bool left) {
  const Side side = left ? Side::Left : Side::Right;
  if (real) {
    const RealDeckShuffler T(real_lengths(lengths));
    const Real x = to_real(Rational::parse(x_text));
    const auto c = ab_coding(T, x, depth, side);
    std::string prefix;
    for (auto s : c.prefix) prefix.push_back(static_cast<char>('0' + s));
    if (opt.out == Format::Json) {
      std::cout << json{{"x", x_text}, {"side", left ? "left" : "right"}, {"depth", depth}, {"prefix", prefix},
                        {"value", c.value.str(30)}, {"error_bound", c.error_bound.str(6)}}
                       .dump(2)
                << '\n';
    } else if (opt.out == Format::Csv) {
      std::cout << "x,prefix,value,error_bound\n" << x_text << ',' << prefix << ',' << c.value.str(30) << ','
                << c.error_bound.str(6) << '\n';
    } else {
      std::cout << "x = " << x_text << (left ? " (left limit)" : "") << ", interval "
                << interval_name(T.iet().interval_of(x, side), T.m()) << '\n';
      std::cout << "coding (" << depth << " symbols): " << prefix << '\n';
      std::cout << "H_l(x) = " << c.value.str(30) << " +- " << c.error_bound.str(6) << '\n';
    }
    return;
  }
  const DeckShuffler T(io::parse_lengths(lengths));
  const Rational x = Rational::parse(x_text);
  const auto c = ab_coding(T, x, side);
  const std::size_t k = T.iet().interval_of(x, side);
  std::string prefix;
  for (auto s : c.prefix) prefix.push_back(static_cast<char>('0' + s));
  if (opt.out == Format::Json) {
    std::cout << json{{"x", x.str()}, {"side", left ? "left" : "right"}, {"interval", interval_name(k, T.m())},
                      {"prefix", prefix}, {"cycle", c.cycle->str()}, {"value", c.value.str()},
                      {"orbit_period", c.orbit_period}}
                     .dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "x,interval,prefix,cycle,value,orbit_period\n"
              << x.str() << ',' << interval_name(k, T.m()) << ',' << prefix << ',' << c.cycle->str() << ','
              << c.value.str() << ',' << c.orbit_period << '\n';
  } else {
    std::cout << "x = " << x.str() << (left ? " (left limit)" : "") << ", interval " << interval_name(k, T.m())
              << '\n';
    std::cout << "coding: " << c.str() << '\n';
    std::cout << "H_l(x) = " << c.value.str() << '\n';
    std::cout << "orbit period: " << c.orbit_period << '\n';
    if (!left) {
      std::vector<std::string> nat;
      for (int s : natural_coding(T.iet(), x, std::min<std::size_t>(2 * c.orbit_period, 24))) nat.push_back(std::to_string(s));
      std::cout << "interval itinerary: " << join(nat, " ") << '\n';
    }
  }
}

void print_iet_flower(const Options& opt, const IetFlower& f, bool exact) {
  if (opt.out == Format::Json) {
    json hulls = json::array();
    for (const Arc& h : f.hulls) hulls.push_back(io::to_json(h));
    std::cout << json{{"flower", io::to_json(f.flower)}, {"hulls", hulls}, {"degenerate_hulls", f.degenerate_hulls}}
                     .dump(2)
              << '\n';
    return;
  }
  if (opt.out == Format::Csv) {
    std::cout << "petal,left,right,length\n";
    for (std::size_t i = 0; i < f.flower.size(); ++i) {
      const Arc& p = f.flower.petals()[i];
      std::cout << i << ',' << p.left.str() << ',' << p.right.str() << ',' << p.length().str() << '\n';
    }
    return;
  }
  auto show = [&](const Arc& a) { return exact ? arc_str(a) : arc_decimal(a); };
  const std::size_t m = (f.hulls.size() + 1) / 2;
  std::cout << "hulls of H_l:\n";
  for (std::size_t i = 0; i < f.hulls.size(); ++i) {
    std::string name;
    if (i + 1 < m) {
      name = "A_" + std::to_string(i + 1);
    } else if (i + 1 == m) {
      name = "A_" + std::to_string(m) + " u B_1";
    } else {
      name = "B_" + std::to_string(i - m + 2);
    }
    std::cout << "  " << name << ": " << show(f.hulls[i]) << '\n';
  }
  std::cout << "flower (" << f.flower.size() << " petals):\n";
  for (const Arc& p : f.flower.petals()) std::cout << "  " << show(p) << '\n';
}

void cmd_iet_flower(const Options& opt, const std::string& lengths, int depth, bool real) {
  if (real) {
    print_iet_flower(opt, flower_from_iet(RealDeckShuffler(real_lengths(lengths)), depth), false);
  } else {
    const DeckShuffler T(io::parse_lengths(lengths));
    const IetFlower f = flower_from_iet(T);
    print_iet_flower(opt, f, true);
    if (!opt.svg.empty()) write_file(opt.svg, io::combined_svg(io::steps_of(h_graph(T)), f.flower));
  }
}

// ---------------------------------------------------------------- orbits

void cmd_orbit_flower(const Options& opt, const std::string& word) {
  const PeriodicOrbit o = orbit_from_word(Word::parse(word), 2);
  const Flower f = flower_from_orbit(o);
  const int n = interlacing_number(o);
  if (opt.out == Format::Json) {
    json pts = json::array();
    for (const auto& x : o.points) pts.push_back(x.str());
    std::cout << json{{"word", o.word.str()}, {"points", pts}, {"interlacing", n}, {"flower", io::to_json(f)}}.dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "petal,left,right\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::cout << i << ',' << f.petals()[i].left.str() << ',' << f.petals()[i].right.str() << '\n';
    }
  } else {
    std::vector<std::string> pts;
    for (const auto& x : o.points) pts.push_back(x.str());
    std::cout << "orbit " << o.word.str() << ": " << join(pts, " -> ") << '\n';
    std::cout << "interlacing number: " << n << '\n';
    std::cout << "canonical flower: " << petals_str(f) << '\n';
  }
  if (!opt.svg.empty()) {
    io::SvgMarks marks;
    marks.dots = o.points;
    for (const auto& x : o.points) marks.crosses.push_back(antipode(x));
    write_file(opt.svg, io::flower_svg(f, marks));
  }
}

void cmd_round_trip(const Options& opt, const std::string& word, bool all, int max_period) {
  std::vector<PeriodicOrbit> orbits;
  if (all) {
    for (auto& o : enumerate_orbits(2, max_period)) {
      if (!o.is_fixed_point()) orbits.push_back(std::move(o));
    }
  } else {
    if (word.empty()) throw ValidationError("round-trip needs --word or --all");
    orbits.push_back(orbit_from_word(Word::parse(word), 2));
  }
  const auto reports = round_trip_batch(orbits, opt.threads);
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.ok() ? 0 : 1;

  if (opt.out == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    std::cout << (all ? json{{"max_period", max_period}, {"orbits", reports.size()}, {"failures", failures},
                             {"reports", arr}}
                      : arr.front())
                     .dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "word,interlacing,lengths,conjugacy,inverse_coding,flower_containment\n";
    for (const auto& r : reports) {
      std::vector<std::string> ls;
      for (const Rational& l : r.lengths) ls.push_back(l.str());
      std::cout << r.word.str() << ',' << r.interlacing << ',' << join(ls, " ") << ',' << r.conjugacy << ','
                << r.inverse_coding << ',' << r.flower_containment << '\n';
    }
  } else if (all) {
    std::map<int, std::pair<std::size_t, std::size_t>> by_class;
    for (const auto& r : reports) {
      auto& [total, ok] = by_class[r.interlacing];
      ++total;
      ok += r.ok() ? 1 : 0;
    }
    std::cout << "interlacing | orbits | passed\n";
    for (const auto& [n, c] : by_class) std::cout << n << " | " << c.first << " | " << c.second << '\n';
    std::cout << reports.size() << " orbits up to period " << max_period << ", " << failures << " failures\n";
    for (const auto& r : reports) {
      for (const auto& f : r.failures) std::cout << "  " << r.word.str() << ": " << f << '\n';
    }
  } else {
    const auto& r = reports.front();
    std::vector<std::string> ls;
    for (const Rational& l : r.lengths) ls.push_back(l.str());
    std::cout << "orbit " << r.word.str() << ", interlacing " << r.interlacing << '\n';
    std::cout << "flower: " << petals_str(r.flower) << '\n';
    std::cout << "deck shuffler lengths: " << join(ls, ", ") << '\n';
    std::cout << "conjugacy h(E_2 x) = T(h(x)): " << (r.conjugacy ? "ok" : "FAILED") << '\n';
    std::cout << "inverse coding H(h(x)) = x: " << (r.inverse_coding ? "ok" : "FAILED") << '\n';
    std::cout << "orbit inside flower_from_iet(T): " << (r.flower_containment ? "ok" : "FAILED") << '\n';
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  if (failures) throw ConsistencyError(std::to_string(failures) + " round trips failed");
}

// ---------------------------------------------------------------- ergopt

void cmd_ergopt(const Options& opt, ExperimentConfig cfg, const std::string& log_csv) {
  cfg.threads = opt.threads;
  const ExperimentResult res = run_experiment(cfg);
  std::size_t ties = 0;
  for (const auto& s : res.samples) ties += s.maximizer.tie ? 1 : 0;
  if (!log_csv.empty()) {
    std::ofstream os(log_csv, std::ios::binary);
    if (!os) throw ValidationError("cannot write " + log_csv);
    write_experiment_csv(os, res);
  }
  const auto fraction = [&](std::size_t c) {
    return io::svg_number(static_cast<double>(c) / static_cast<double>(cfg.samples));
  };
  if (opt.out == Format::Json) {
    json rows = json::array();
    for (const auto& [n, c] : res.tally) rows.push_back({{"interlacing", n}, {"count", c}});
    std::cout << json{{"degree", cfg.degree}, {"samples", cfg.samples}, {"max_period", cfg.max_period},
                      {"seed", cfg.seed}, {"tally", rows}, {"ties", ties}}
                     .dump(2)
              << '\n';
  } else if (opt.out == Format::Csv) {
    std::cout << "interlacing,count,fraction\n";
    for (const auto& [n, c] : res.tally) std::cout << n << ',' << c << ',' << fraction(c) << '\n';
  } else {
    std::cout << "degree " << cfg.degree << ", " << cfg.samples << " samples, orbits up to period " << cfg.max_period
              << ", seed " << cfg.seed << '\n';
    std::cout << "interlacing | maximizers | fraction\n";
    for (const auto& [n, c] : res.tally) std::cout << n << " | " << c << " | " << fraction(c) << '\n';
    std::cout << "ties flagged: " << ties << '\n';
  }
}

// ---------------------------------------------------------------- render

void cmd_render(const Options& opt, const std::string& word, const std::string& lengths) {
  if (opt.svg.empty()) throw ValidationError("render needs --svg PATH");
  if (!lengths.empty()) {
    const DeckShuffler T(io::parse_lengths(lengths));
    const HGraph g = h_graph(T, 0);
    const IetFlower f = flower_from_iet(T);
    io::SvgMarks marks;
    for (const auto& p : g.plateaus) {
      marks.dots.emplace_back(p.value);
      marks.crosses.push_back(antipode(CirclePoint(p.value)));
    }
    write_file(opt.svg, io::combined_svg(io::steps_of(g), f.flower, marks));
  } else {
    const PeriodicOrbit o = orbit_from_word(Word::parse(word), 2);
    io::SvgMarks marks;
    marks.dots = o.points;
    for (const auto& x : o.points) marks.crosses.push_back(antipode(x));
    write_file(opt.svg, io::flower_svg(flower_from_orbit(o), marks));
  }
  std::cout << "wrote " << opt.svg << '\n';
}

unsigned default_threads() {
  if (const char* env = std::getenv("FLOWER_IET_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("FLOWER_IET_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic orbits of the doubling map, flowers and deck-shuffler interval exchanges."};
  app.name("flower-iet");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file");

  Options opt;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--out", opt.out, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--threads", opt.threads, "Worker threads (default: $FLOWER_IET_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  int max_period = 14;
  auto* tally = app.add_subcommand("orbits-tally", "Interlacing numbers of all orbits up to a period");
  tally->add_option("--max-period", max_period, "Largest period")->check(CLI::Range(1, 24))->capture_default_str();

  int example = 1;
  int depth = kDefaultDepth;
  auto* ex = app.add_subcommand("example", "Reproduce one of the three worked deck-shuffler examples");
  ex->add_option("number", example, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  ex->add_option("--depth", depth, "Coding depth for example 3")->check(CLI::Range(8, 150));
  ex->add_option("--svg", opt.svg, "Write the H_l graph and flower as SVG");

  std::string lengths;
  std::string x_text;
  bool real = false;
  bool left = false;
  auto* code = app.add_subcommand("iet-code", "A,B coding and H_l(x) for a deck shuffler");
  code->add_option("--lengths", lengths, "Comma-separated lengths, e.g. 2/5,1/5,1/5,1/5")->required();
  code->add_option("--x", x_text, "Point in [0, 1)")->required();
  code->add_option("--depth", depth, "Symbols to compute in bounded-precision mode")->check(CLI::Range(1, 150));
  code->add_flag("--real", real, "Bounded-precision mode");
  code->add_flag("--left", left, "Code the left limit x-");

  auto* iflower = app.add_subcommand("iet-flower", "Flower containing the image of H_l");
  iflower->add_option("--lengths", lengths, "Comma-separated lengths")->required();
  iflower->add_option("--depth", depth, "Coding depth in bounded-precision mode")->check(CLI::Range(8, 150));
  iflower->add_flag("--real", real, "Bounded-precision mode");
  iflower->add_option("--svg", opt.svg, "Write the H_l graph and flower as SVG");

  std::string word;
  auto* oflower = app.add_subcommand("orbit-flower", "Canonical flower of a periodic orbit");
  oflower->add_option("--word", word, "Binary cyclic word, e.g. 0011")->required();
  oflower->add_option("--svg", opt.svg, "Write the flower as SVG");

  bool all = false;
  auto* rt = app.add_subcommand("round-trip", "Orbit -> flower -> deck shuffler -> coding, checked exactly");
  rt->add_option("--word", word, "Binary cyclic word");
  rt->add_flag("--all", all, "Every orbit up to --max-period");
  rt->add_option("--max-period", max_period, "Largest period with --all")->check(CLI::Range(2, 20));

  ExperimentConfig cfg;
  std::string log_csv;
  auto* erg = app.add_subcommand("ergopt", "Seeded search for maximizing periodic orbits");
  erg->add_option("--degree", cfg.degree, "Odd polynomial degree")->capture_default_str();
  erg->add_option("--samples", cfg.samples, "Number of random polynomials")->capture_default_str();
  erg->add_option("--max-period", cfg.max_period, "Largest orbit period")->check(CLI::Range(1, 20))->capture_default_str();
  erg->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  erg->add_option("--log-csv", log_csv, "Per-sample CSV log");

  std::string render_word = "0011";
  std::string render_lengths;
  auto* render = app.add_subcommand("render", "Write an SVG figure");
  render->add_option("--svg", opt.svg, "Output path")->required();
  auto* rw = render->add_option("--word", render_word, "Orbit whose canonical flower to draw")->capture_default_str();
  render->add_option("--lengths", render_lengths, "Deck shuffler whose H_l graph and flower to draw")->excludes(rw);

  try {
    opt.threads = default_threads();
    app.parse(argc, argv);
    if (*tally) cmd_orbits_tally(opt, max_period);
    if (*ex) cmd_example(opt, example, *ex->get_option("--depth") ? depth : 60);
    if (*code) cmd_iet_code(opt, lengths, x_text, depth, real, left);
    if (*iflower) cmd_iet_flower(opt, lengths, depth, real);
    if (*oflower) cmd_orbit_flower(opt, word);
    if (*rt) cmd_round_trip(opt, word, all, max_period);
    if (*erg) cmd_ergopt(opt, cfg, log_csv);
    if (*render) cmd_render(opt, render_word, render_lengths);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
