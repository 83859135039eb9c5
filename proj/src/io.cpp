#include "flowers/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace flowers::io {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = 200.0;
constexpr double kRadius = 150.0;

std::string n(double v) { return svg_number(v); }

std::pair<double, double> on_circle(double t, double radius, double cx) {
  const double a = 2.0 * std::numbers::pi * t;
  return {cx + radius * std::cos(a), kCenter - radius * std::sin(a)};
}

std::string flower_body(const Flower& flower, const SvgMarks& marks, double cx) {
  std::ostringstream os;
  os << "<circle cx=\"" << n(cx) << "\" cy=\"" << n(kCenter) << "\" r=\"" << n(kRadius)
     << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const Arc& p : flower.petals()) {
    const double len = p.length().to_double();
    const auto [x0, y0] = on_circle(p.left.to_double(), kRadius, cx);
    const auto [x1, y1] = on_circle(p.right.to_double(), kRadius, cx);
    os << "<path d=\"M " << n(x0) << ' ' << n(y0) << " A " << n(kRadius) << ' ' << n(kRadius) << " 0 "
       << (len > 0.5 ? 1 : 0) << " 0 " << n(x1) << ' ' << n(y1)
       << "\" fill=\"none\" stroke=\"#2a7ab0\" stroke-width=\"14\" stroke-opacity=\"0.6\"/>\n";
  }
  for (const CirclePoint& x : marks.dots) {
    const auto [px, py] = on_circle(x.to_double(), kRadius, cx);
    os << "<circle cx=\"" << n(px) << "\" cy=\"" << n(py) << "\" r=\"3\" fill=\"#000000\"/>\n";
  }
  for (const CirclePoint& x : marks.crosses) {
    const auto [px, py] = on_circle(x.to_double(), kRadius, cx);
    os << "<path d=\"M " << n(px - 3) << ' ' << n(py - 3) << " L " << n(px + 3) << ' ' << n(py + 3) << " M "
       << n(px - 3) << ' ' << n(py + 3) << " L " << n(px + 3) << ' ' << n(py - 3)
       << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  }
  return os.str();
}

std::string graph_body(std::span<const Step> steps, double ox) {
  constexpr double margin = 40.0;
  constexpr double side = kSize - 2 * margin;
  auto X = [&](double x) { return ox + margin + side * x; };
  auto Y = [&](double y) { return kSize - margin - side * y; };
  std::ostringstream os;
  os << "<rect x=\"" << n(X(0)) << "\" y=\"" << n(Y(1)) << "\" width=\"" << n(side) << "\" height=\"" << n(side)
     << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const Step& s : steps) {
    os << "<path d=\"M " << n(X(s.x0)) << ' ' << n(Y(s.y)) << " L " << n(X(s.x1)) << ' ' << n(Y(s.y))
       << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }
  return os.str();
}

std::string header(double width) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + n(width) + "\" height=\"" + n(kSize) +
         "\" viewBox=\"0 0 " + n(width) + ' ' + n(kSize) + "\">\n";
}

}  // namespace

std::string svg_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const Arc& arc) { return json::array({arc.left.str(), arc.right.str()}); }

json to_json(const Flower& flower) {
  json petals = json::array();
  for (const Arc& p : flower.petals()) petals.push_back(to_json(p));
  return json{{"d", flower.d()}, {"petals", petals}};
}

json to_json(const Iet& iet) {
  json lengths = json::array();
  for (const Rational& l : iet.lengths()) lengths.push_back(l.str());
  return json{{"lengths", lengths}, {"permutation", iet.permutation()}};
}

json to_json(const DeckShuffler& T) {
  json lengths = json::array();
  for (const Rational& l : T.lengths()) lengths.push_back(l.str());
  return json{{"lengths", lengths}};
}

json to_json(const RoundTripReport& report) {
  json lengths = json::array();
  for (const Rational& l : report.lengths) lengths.push_back(l.str());
  json j{{"word", report.word.str()},
         {"interlacing", report.interlacing},
         {"flower", to_json(report.flower)},
         {"lengths", lengths},
         {"checks",
          {{"conjugacy", report.conjugacy},
           {"inverse_coding", report.inverse_coding},
           {"flower_containment", report.flower_containment}}}};
  if (!report.failures.empty()) j["failures"] = report.failures;
  return j;
}

Flower flower_from_json(const json& j) {
  try {
    std::vector<Arc> petals;
    for (const auto& p : j.at("petals")) {
      petals.push_back(Arc{CirclePoint::parse(p.at(0).get<std::string>()), CirclePoint::parse(p.at(1).get<std::string>())});
    }
    return Flower(std::move(petals), j.at("d").get<int>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed flower JSON: ") + e.what());
  }
}

std::vector<Rational> parse_lengths(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string h_graph_csv(const HGraph& graph) {
  std::ostringstream os;
  os << "x,H(x),plateau_id,cycle_word\n";
  for (const auto& s : graph.samples) {
    os << s.x.str() << ',' << s.value.str() << ',' << s.plateau << ',' << graph.plateaus[s.plateau].cycle.str() << '\n';
  }
  return os.str();
}

std::string flower_svg(const Flower& flower, const SvgMarks& marks) {
  return header(kSize) + flower_body(flower, marks, kCenter) + "</svg>\n";
}

std::string step_graph_svg(std::span<const Step> steps) { return header(kSize) + graph_body(steps, 0.0) + "</svg>\n"; }

std::vector<Step> steps_of(const HGraph& graph) {
  std::vector<Step> out;
  for (const auto& p : graph.plateaus) out.push_back(Step{p.lo.to_double(), p.hi.to_double(), p.value.to_double()});
  return out;
}

std::string combined_svg(std::span<const Step> steps, const Flower& flower, const SvgMarks& marks) {
  return header(2 * kSize) + graph_body(steps, 0.0) + flower_body(flower, marks, kSize + kCenter) + "</svg>\n";
}

}  // namespace flowers::io
