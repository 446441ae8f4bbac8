#include "commands.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "codedomain/bounds.hpp"
#include "codedomain/code_io.hpp"
#include "codedomain/effective_sets.hpp"
#include "codedomain/errors.hpp"
#include "codedomain/search.hpp"
#include "codedomain/spoiling.hpp"
#include "curve_spec.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace cli {

namespace {

using namespace codedomain;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

Json budget_json(const SearchBudget& b) {
  return Json{{"max_nodes", b.max_nodes}, {"max_millis", b.max_millis}, {"rng_seed", b.rng_seed}};
}

void check_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) throw ConfigError("--q must be in [2, 256]");
}

double mid(const RatInterval& iv) { return to_double(iv.midpoint()); }

std::vector<std::pair<double, double>> sample_curve(const BoundCurve& c, int samples) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= samples; ++i) {
    Rational x = make_rational(i, samples);
    pts.emplace_back(to_double(x), mid(c.eval(x, 24)));
  }
  return pts;
}

std::vector<std::pair<double, double>> to_doubles(const Polyline& line) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : line) pts.emplace_back(to_double(p.delta), to_double(p.r));
  return pts;
}

void overlay_bounds(SvgPlot& plot, unsigned q) {
  plot.begin_layer("curves");
  plot.polyline(sample_curve(BoundCurve::singleton(q), 256), "#888888", 1.2, "singleton");
  plot.polyline(sample_curve(BoundCurve::hamming(q), 256), "#2a7ab0", 1.2, "hamming");
  plot.polyline(sample_curve(BoundCurve::gv_lower(q), 256), "#3a9d3a", 1.2, "gv");
  plot.polyline(sample_curve(BoundCurve::vg(q), 256), "#d04020", 1.6, "vg");
  plot.end_layer();
}

void rect_of(SvgPlot& plot, const GridBall& b, const std::string& fill, double opacity) {
  RatInterval dr = b.delta_range(), rr = b.rate_range();
  plot.rect(to_double(dr.lo()), to_double(rr.lo()), to_double(dr.hi()), to_double(rr.hi()), fill, opacity);
}

BoundCurve named_bound(const std::string& name, unsigned q) {
  if (name == "vg") return BoundCurve::vg(q);
  if (name == "gv") return BoundCurve::gv_lower(q);
  if (name == "singleton") return BoundCurve::singleton(q);
  if (name == "hamming") return BoundCurve::hamming(q);
  if (name == "plotkin") return BoundCurve::plotkin_zero(q);
  throw ConfigError("unknown curve '" + name + "' (expected vg, gv, singleton, hamming, plotkin)");
}

Provenance parse_strategy(const std::string& name) {
  for (auto p : {Provenance::Exhaustive, Provenance::ExhaustiveLinear, Provenance::Greedy, Provenance::Random,
                 Provenance::SeededFamily}) {
    if (name == to_string(p)) return p;
  }
  throw ConfigError("unknown strategy '" + name +
                    "' (expected exhaustive, exhaustive-linear, greedy, random, seeded-family)");
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const ContractViolation&) {
    throw ConfigError(flag + ": '" + text + "' is not a rational");
  }
}

BigInt parse_bigint_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_bigint(text);
  } catch (const ContractViolation&) {
    throw ConfigError(flag + ": '" + text + "' is not an integer");
  }
}

/// Re-checks every emitted point against its parameters before writing.
std::string checked_row(const CodeParams& p, const CodePoint& point) {
  if (!(point == code_point(p))) throw InternalContractError("emitted point differs from code_point(params)");
  return point_csv_row(p);
}

int finish(OutputSet& out, bool complete, const std::string& status) {
  out.finish(complete, status);
  return complete ? kExitOk : kExitPartial;
}

}  // namespace

int cmd_bounds(const RunConfig& cfg) {
  check_alphabet(cfg.q);
  if (cfg.grid < 2) throw ConfigError("--grid must be at least 2");
  if (cfg.precision < 8 || cfg.precision > 4096) throw ConfigError("--precision must be in [8, 4096]");
  std::vector<BoundCurve> curves;
  for (const auto& name : split(cfg.curves, ',')) curves.push_back(named_bound(name, cfg.q));
  if (curves.empty()) throw ConfigError("--curves is empty");

  Json config{{"q", cfg.q}, {"grid", cfg.grid}, {"precision", cfg.precision}, {"curves", cfg.curves}, {"svg", cfg.svg}};
  OutputSet out(cfg.out_dir, "bounds", config);
  std::vector<std::string> rows;
  SvgPlot plot("bound curves, q = " + std::to_string(cfg.q));
  plot.begin_layer("curves");
  for (const auto& c : curves) {
    std::vector<std::pair<double, double>> pts;
    for (unsigned i = 0; i < cfg.grid; ++i) {
      Rational x = make_rational(static_cast<long>(i), static_cast<long>(cfg.grid - 1));
      RatInterval v = c.eval(x, cfg.precision);
      rows.push_back(to_string(x) + "," + c.name() + "," + format_double(to_double(v.lo())) + "," +
                     format_double(to_double(v.hi())) + "," + std::to_string(cfg.precision));
      pts.emplace_back(to_double(x), mid(v));
    }
    plot.polyline(pts, c.kind() == CurveKind::VG ? "#d04020" : "#2a7ab0", 1.4, c.name());
  }
  plot.end_layer();
  out.csv("bounds.csv", "delta,curve,lo_float,hi_float,precision_bits", rows);
  Json names = Json::array();
  for (const auto& c : curves) names.push_back(c.name());
  out.json("bounds.json", Json{{"q", cfg.q},
                               {"zero_region_start", to_string(1 - make_rational(1, cfg.q))},
                               {"rows", rows.size()},
                               {"curves", names}});
  if (cfg.svg) out.svg("bounds.svg", plot.str());
  return finish(out, true, "complete");
}

int cmd_enumerate(const RunConfig& cfg) {
  check_alphabet(cfg.q);
  if (cfg.n_max < 1 || cfg.n_max > 64) throw ConfigError("--nmax must be in [1, 64]");
  std::vector<Provenance> strategies;
  for (const auto& s : split(cfg.strategy, ',')) strategies.push_back(parse_strategy(s));
  if (strategies.empty()) throw ConfigError("--strategy is empty");

  Json config{{"q", cfg.q}, {"nmax", cfg.n_max}, {"strategy", cfg.strategy}, {"budget", budget_json(cfg.budget)},
              {"svg", cfg.svg}};
  OutputSet out(cfg.out_dir, "enumerate", config);
  PointCloud cloud = enumerate_point_cloud(cfg.q, cfg.n_max, strategies, cfg.budget);
  std::vector<std::string> rows;
  for (const auto& e : cloud.entries) rows.push_back(checked_row(e.params, e.point) + "," + to_string(e.provenance));
  out.csv("cloud.csv", std::string(kPointCsvHeader) + ",provenance", rows);
  if (cfg.svg) {
    SvgPlot plot("code points, q = " + std::to_string(cfg.q) + ", n <= " + std::to_string(cfg.n_max));
    overlay_bounds(plot, cfg.q);
    plot.begin_layer("cloud");
    for (const auto& e : cloud.entries) plot.point(to_double(e.point.delta), to_double(e.point.r), 2.2, "#202020");
    plot.end_layer();
    out.svg("cloud.svg", plot.str());
  }
  return finish(out, cloud.complete, cloud.complete ? "complete" : "partial: a strategy hit its budget");
}

int cmd_sample(const RunConfig& cfg) {
  check_alphabet(cfg.q);
  if (cfg.n < 1) throw ConfigError("--n must be positive");
  BigInt m = parse_bigint_arg(cfg.m, "--m");
  if (m < 1 || m > pow_of(cfg.q, cfg.n)) throw ConfigError("--m must be in [1, q^n]");
  if (m > (1u << 20)) throw ConfigError("--m must be at most 2^20");
  if (cfg.trials < 1) throw ConfigError("--trials must be positive");

  Json config{{"q", cfg.q}, {"n", cfg.n}, {"m", cfg.m}, {"trials", cfg.trials}, {"budget", budget_json(cfg.budget)}};
  OutputSet out(cfg.out_dir, "sample", config);
  auto samples = random_ensemble(cfg.q, cfg.n, m.get_ui(), cfg.trials, cfg.budget);
  std::vector<std::string> rows;
  double sum = 0;
  unsigned lo = cfg.n, hi = 0;
  for (std::size_t t = 0; t < samples.size(); ++t) {
    Rational delta = make_rational(samples[t].d, cfg.n);
    rows.push_back(std::to_string(t) + "," + std::to_string(samples[t].d) + "," + to_string(delta) + "," +
                   format_double(to_double(delta)));
    sum += to_double(delta);
    lo = std::min(lo, samples[t].d);
    hi = std::max(hi, samples[t].d);
  }
  out.csv("samples.csv", "trial,d,delta,delta_float", rows);
  CodeParams p(cfg.q, cfg.n, m, samples.front().d);
  Rational rate = code_point(p).r;
  Json summary{{"trials", samples.size()},
               {"mean_delta", format_double(sum / static_cast<double>(samples.size()))},
               {"min_d", lo},
               {"max_d", hi},
               {"rate", to_string(rate)}};
  if (rate <= make_rational(1, 2)) {
    RatInterval root = vg_root(cfg.q, rate, 40);
    summary["vg_root"] = {{"lo", format_double(to_double(root.lo()))}, {"hi", format_double(to_double(root.hi()))}};
  }
  out.json("sample.json", summary);
  return finish(out, true, "complete");
}

int cmd_oracle(const RunConfig& cfg) {
  check_alphabet(cfg.q);
  if (cfg.n < 1) throw ConfigError("--n must be positive");
  BigInt m = parse_bigint_arg(cfg.m, "--m");
  Json config{{"q", cfg.q}, {"n", cfg.n}, {"m", cfg.m}, {"linear", cfg.linear}, {"budget", budget_json(cfg.budget)}};
  if (cfg.d) config["d"] = *cfg.d;
  OutputSet out(cfg.out_dir, "oracle", config);

  if (cfg.d) {
    if (!is_well_formed(ParamTriple{cfg.n, m, *cfg.d}, cfg.q)) throw ConfigError("(n, m, d) is not a well-formed triple");
    ExistsResult r = exists_code(cfg.q, cfg.n, m, *cfg.d, cfg.budget);
    out.json("oracle.json", Json{{"mode", "exists"}, {"verdict", to_string(r.verdict)}, {"note", r.note}, {"nodes", r.nodes}});
    if (r.witness) {
      out.text("witness.code", code_to_text(*r.witness));
      out.csv("witness.csv", kPointCsvHeader, {checked_row(params(*r.witness), code_point(params(*r.witness)))});
    }
    bool decided = r.verdict != Verdict::Unknown;
    return finish(out, decided, decided ? "complete" : "partial: " + r.note);
  }

  if (m < 1 || m > pow_of(cfg.q, cfg.n)) throw ConfigError("--m must be in [1, q^n]");
  SearchMode mode = cfg.linear ? SearchMode::Linear : SearchMode::Unstructured;
  BestDistance b = best_min_distance(cfg.q, cfg.n, m, cfg.budget, mode);
  out.json("oracle.json", Json{{"mode", cfg.linear ? "best-linear" : "best"}, {"d", b.d}, {"exact", b.exact}, {"nodes", b.nodes}});
  if (b.witness && b.witness->q() <= 36) {
    out.text("witness.code", code_to_text(*b.witness));
    out.csv("witness.csv", kPointCsvHeader, {checked_row(params(*b.witness), code_point(params(*b.witness)))});
  }
  return finish(out, b.exact, b.exact ? "complete" : "partial: budget exhausted, d is a lower bound");
}

int cmd_spoil(const RunConfig& cfg) {
  if (cfg.code_path.empty()) throw ConfigError("--code is required");
  std::ifstream in(cfg.code_path);
  if (!in) throw ConfigError("cannot read code file " + cfg.code_path);
  Code c = [&] {
    try {
      return read_code(in);
    } catch (const ContractViolation& e) {
      throw ConfigError(cfg.code_path + ": " + e.what());
    }
  }();
  auto ops = split(cfg.ops, ',');
  if (ops.empty()) throw ConfigError("--ops needs at least one of lengthen, puncture, shorten");
  for (const auto& op : ops) {
    if (op != "lengthen" && op != "puncture" && op != "shorten") throw ConfigError("unknown spoiling operation '" + op + "'");
  }

  Json config{{"code", std::filesystem::path(cfg.code_path).filename().string()}, {"ops", cfg.ops}};
  OutputSet out(cfg.out_dir, "spoil", config);
  SpoilTrace trace;
  std::vector<std::string> rows{"0,initial," + checked_row(params(c), code_point(params(c)))};
  Code cur = c;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    try {
      if (ops[k] == "lengthen") cur = lengthen(cur, &trace);
      else if (ops[k] == "puncture") cur = puncture(cur, &trace);
      else cur = shorten(cur, &trace);
    } catch (const DistanceTooSmall& e) {
      throw ConfigError("step " + std::to_string(k + 1) + " (" + ops[k] + "): " + e.what());
    } catch (const DegenerateInput& e) {
      throw ConfigError("step " + std::to_string(k + 1) + " (" + ops[k] + "): " + e.what());
    }
    rows.push_back(std::to_string(k + 1) + "," + ops[k] + "," + checked_row(params(cur), code_point(params(cur))));
  }
  if (!(replay(c, trace) == cur)) throw InternalContractError("spoil: trace does not replay");
  out.csv("spoil.csv", std::string("step,op,") + kPointCsvHeader, rows);
  out.text("spoiled.code", code_to_text(cur));
  out.json("trace.json", Json::parse(trace_to_json(trace)));
  return finish(out, true, "complete");
}

int cmd_realize(const RunConfig& cfg) {
  check_alphabet(cfg.q);
  auto parts = split(cfg.target, ',');
  if (parts.size() != 2) throw ConfigError("--target expects 'R,delta' as two rationals");
  Rational r = parse_rational_arg(parts[0], "--target"), delta = parse_rational_arg(parts[1], "--target");
  if (!(r > 0 && r < 1 && delta > 0 && delta < 1)) throw ConfigError("--target must lie strictly inside the unit square");
  if (cfg.count < 1 || cfg.count > 64) throw ConfigError("--count must be in [1, 64]");
  BigInt n = lcm(r.get_den(), delta.get_den());
  if (n > 4096) throw ConfigError("--target denominators are too large");
  RealizeTarget target{static_cast<unsigned>(BigInt(r * n).get_ui()), static_cast<unsigned>(n.get_ui()),
                       static_cast<unsigned>(BigInt(delta * n).get_ui())};

  Json config{{"q", cfg.q}, {"target", cfg.target}, {"count", cfg.count}, {"budget", budget_json(cfg.budget)}};
  OutputSet out(cfg.out_dir, "realize", config);
  GreedySeedSource seeds;
  std::vector<RealizedCode> codes;
  try {
    codes = realize_point(target, cfg.q, cfg.count, seeds, cfg.budget);
  } catch (const SeedNotFound& e) {
    out.json("realize.json", Json{{"error", e.what()}, {"log", e.log()}});
    return finish(out, false, std::string("partial: ") + e.what());
  }
  std::vector<std::string> rows;
  for (const auto& rc : codes) {
    CodeParams p = params(rc.code);
    CodePoint cp = code_point(p);
    if (!(cp.r == r && cp.delta == delta)) throw InternalContractError("realize: code point differs from the target");
    std::string stem = "realized_" + std::to_string(rc.multiple);
    out.text(stem + ".code", code_to_text(rc.code));
    out.json(stem + ".trace.json", Json{{"seed_origin", rc.seed_origin},
                                        {"seed", code_to_text(rc.seed)},
                                        {"trace", Json::parse(trace_to_json(rc.trace))}});
    rows.push_back(std::to_string(rc.multiple) + "," + rc.seed_origin + "," + checked_row(p, cp));
  }
  out.csv("realize.csv", std::string("multiple,seed,") + kPointCsvHeader, rows);
  return finish(out, true, "complete");
}

int cmd_strip(const RunConfig& cfg) {
  if (cfg.curve.empty()) throw ConfigError("--curve is required");
  if (cfg.grid_n < 1 || cfg.grid_n > 1024) throw ConfigError("--N must be in [1, 1024]");
  BoundCurve curve = parse_curve(cfg.curve);
  if (!curve.continuous()) throw ConfigError("--curve must be continuous for strips");
  Json config{{"curve", cfg.curve}, {"N", cfg.grid_n}, {"timeout_ms", cfg.timeout_ms}, {"svg", cfg.svg}};
  OutputSet out(cfg.out_dir, "strip", config);

  StripResult r = build_strip(core_from_curve(curve), cfg.grid_n, cfg.timeout_ms);
  Json body = Json::parse(strip_to_json(r));
  body["curve"] = curve.name();
  out.json("strip.json", body);
  if (cfg.svg) {
    SvgPlot plot("N-strip of " + cfg.curve + ", N = " + std::to_string(cfg.grid_n));
    plot.begin_layer("strip");
    for (const auto& b : r.strip.balls) rect_of(plot, b, "#f0b040", 0.5);
    plot.end_layer();
    plot.begin_layer("curves");
    plot.polyline(sample_curve(curve, 256), "#d04020", 1.4, curve.name());
    plot.end_layer();
    plot.begin_layer("staircases");
    plot.polyline(to_doubles(r.strip.upper), "#2a7ab0", 1.0, "upper");
    plot.polyline(to_doubles(r.strip.lower), "#3a9d3a", 1.0, "lower");
    plot.end_layer();
    out.svg("strip.svg", plot.str());
  }
  return finish(out, r.complete, r.status);
}

int cmd_approx(const RunConfig& cfg) {
  if (cfg.curve.empty()) throw ConfigError("--curve is required");
  if (cfg.grid_n < 1 || cfg.grid_n > 512) throw ConfigError("--N must be in [1, 512]");
  BoundCurve curve = parse_curve(cfg.curve);
  if (!curve.continuous()) throw ConfigError("--curve must be continuous");
  Json config{{"curve", cfg.curve}, {"N", cfg.grid_n}, {"timeout_ms", cfg.timeout_ms}, {"svg", cfg.svg}};
  OutputSet out(cfg.out_dir, "approx", config);

  ApproxResult r = two_sided_approx(domain_re_from_curve(curve), domain_core_from_curve(curve), cfg.grid_n,
                                    cfg.timeout_ms);
  CurveEstimate e = curve_estimate(r.set);
  Json body = Json::parse(approx_to_json(r, e));
  body["curve"] = curve.name();
  out.json("approx.json", body);
  if (cfg.svg) {
    SvgPlot plot("exceptional balls of " + cfg.curve + ", N = " + std::to_string(cfg.grid_n));
    plot.begin_layer("upper");
    for (const auto& b : r.set.upper) rect_of(plot, b, "#9cc3e6", 0.5);
    plot.end_layer();
    plot.begin_layer("lower");
    for (const auto& b : r.set.lower) rect_of(plot, b, "#a6d9a0", 0.5);
    plot.end_layer();
    plot.begin_layer("exceptional");
    for (const auto& b : r.set.exceptional) rect_of(plot, b, "#e04030", 0.7);
    plot.end_layer();
    plot.begin_layer("curves");
    plot.polyline(sample_curve(curve, 256), "#202020", 1.2, curve.name());
    plot.end_layer();
    plot.begin_layer("staircases");
    plot.polyline(to_doubles(e.upper), "#2a7ab0", 1.0, "upper");
    plot.polyline(to_doubles(e.lower), "#3a9d3a", 1.0, "lower");
    plot.end_layer();
    out.svg("approx.svg", plot.str());
  }
  return finish(out, r.complete, r.status);
}

}  // namespace cli
