#pragma once

// JSON, CSV and SVG emission for flowers, IETs, H_l graphs and round-trip
// reports. SVG coordinates are printed with 12 significant digits.

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "flowers/bridge.hpp"
#include "flowers/flower.hpp"
#include "flowers/iet.hpp"

namespace flowers::io {

using nlohmann::json;

json to_json(const Arc& arc);
/// {"d": d, "petals": [["p/q", "r/s"], ...]}
json to_json(const Flower& flower);
/// {"lengths": [...], "permutation": [...]}
json to_json(const Iet& iet);
/// {"lengths": [...]}
json to_json(const DeckShuffler& T);
/// {word, interlacing, flower, lengths, checks: {conjugacy, inverse_coding, flower_containment}}
json to_json(const RoundTripReport& report);

Flower flower_from_json(const json& j);

/// Parses "2/5,1/5,0.2,..." into rationals.
std::vector<Rational> parse_lengths(std::string_view text);

/// Columns x, H(x), plateau_id, cycle_word; one row per sample.
std::string h_graph_csv(const HGraph& graph);

/// "%.12g"
std::string svg_number(double v);

struct SvgMarks {
  std::vector<CirclePoint> dots;
  std::vector<CirclePoint> crosses;
};

/// Unit circle drawn as an annulus, petals as thick arcs, dots and crosses
/// on the circle. Angle 2 pi x counterclockwise from the positive x axis.
std::string flower_svg(const Flower& flower, const SvgMarks& marks = {});

struct Step {
  double x0;
  double x1;
  double y;
};

/// Graph on [0, 1]^2 made of horizontal steps.
std::string step_graph_svg(std::span<const Step> steps);

std::vector<Step> steps_of(const HGraph& graph);

/// Two panels side by side: graph and flower.
std::string combined_svg(std::span<const Step> steps, const Flower& flower, const SvgMarks& marks = {});

}  // namespace flowers::io
