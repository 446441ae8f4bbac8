#include <json.hpp>

#include "codedomain/effective_sets.hpp"
#include "codedomain/errors.hpp"
#include "codedomain/spoiling.hpp"

namespace codedomain {

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const CodeParams& p) {
  return Json{{"q", p.q}, {"n", p.n}, {"m", to_string(p.m)}, {"d", p.d}};
}

CodeParams params_from(const Json& j) {
  return CodeParams(j.at("q").get<unsigned>(), j.at("n").get<unsigned>(), parse_bigint(j.at("m").get<std::string>()),
                    j.at("d").get<unsigned>());
}

Json point_json(const RatPoint& p) { return Json{{"delta", to_string(p.delta)}, {"r", to_string(p.r)}}; }

Json polyline_json(const Polyline& line) {
  Json out = Json::array();
  for (const auto& p : line) out.push_back(point_json(p));
  return out;
}

Json balls_json(const std::vector<GridBall>& balls) {
  Json out = Json::array();
  for (const auto& b : balls) out.push_back(Json::array({b.i, b.j}));
  return out;
}

SpoilKind kind_from(const std::string& s) {
  if (s == "lengthen") return SpoilKind::Lengthen;
  if (s == "puncture") return SpoilKind::Puncture;
  if (s == "shorten") return SpoilKind::Shorten;
  throw ContractViolation("unknown spoil step kind '" + s + "'");
}

}  // namespace

std::string trace_to_json(const SpoilTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"kind", to_string(s.kind)}, {"coordinate", s.coordinate}, {"symbol", s.symbol}});
  }
  Json j{{"initial", params_json(trace.initial)}, {"steps", steps}, {"final", params_json(trace.final_params)}};
  return j.dump(2);
}

SpoilTrace trace_from_json(const std::string& text) {
  try {
    Json j = Json::parse(text);
    SpoilTrace t;
    t.initial = params_from(j.at("initial"));
    t.final_params = params_from(j.at("final"));
    for (const auto& s : j.at("steps")) {
      t.steps.push_back(SpoilStep{kind_from(s.at("kind").get<std::string>()), s.at("coordinate").get<std::size_t>(),
                                  s.at("symbol").get<Symbol>()});
    }
    return t;
  } catch (const Json::exception& e) {
    throw ContractViolation(std::string("malformed trace JSON: ") + e.what());
  }
}

std::string strip_to_json(const StripResult& result) {
  const NStrip& s = result.strip;
  Json columns = Json::array();
  for (const auto& c : s.columns) columns.push_back(Json::array({c.lo, c.hi}));
  Json j{{"N", s.n_grid},
         {"complete", result.complete},
         {"status", result.status},
         {"rounds", result.rounds},
         {"connected", s.connected},
         {"width_ok", s.width_ok},
         {"touches_corner", s.touches_corner},
         {"ball_count", s.balls.size()},
         {"balls", balls_json(s.balls)},
         {"columns", columns},
         {"upper", polyline_json(s.upper)},
         {"lower", polyline_json(s.lower)}};
  return j.dump(2);
}

std::string approx_to_json(const ApproxResult& result, const CurveEstimate& estimate) {
  Json upper_values = Json::array();
  Json lower_values = Json::array();
  for (const auto& v : estimate.upper_values) upper_values.push_back(to_string(v));
  for (const auto& v : estimate.lower_values) lower_values.push_back(to_string(v));
  Json estimates = Json::array();
  for (const auto& p : estimate.ball_estimates) estimates.push_back(point_json(p));
  Json j{{"N", result.set.n_grid},
         {"complete", result.complete},
         {"status", result.status},
         {"rounds", result.rounds},
         {"exceptional", balls_json(result.set.exceptional)},
         {"unamended_exceptional", balls_json(result.unamended)},
         {"upper", balls_json(result.set.upper)},
         {"lower", balls_json(result.set.lower)},
         {"estimate",
          Json{{"error_bound", to_string(estimate.error_bound)},
               {"upper_values", upper_values},
               {"lower_values", lower_values},
               {"ball_estimates", estimates}}}};
  return j.dump(2);
}

}  // namespace codedomain
