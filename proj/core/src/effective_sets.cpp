#include "codedomain/effective_sets.hpp"

#include <algorithm>
#include <chrono>

#include "codedomain/errors.hpp"

namespace codedomain {

BallPresentation::BallPresentation(std::string name, BallKind kind, BallProver prover, bool stage_independent)
    : name_(std::move(name)), kind_(kind), prover_(std::move(prover)), stage_independent_(stage_independent) {}

std::vector<RatBall> BallPresentation::next(std::size_t max_checks) {
  std::vector<RatBall> out;
  for (std::size_t done = 0; done < max_checks; ++done) {
    RatBall ball = make_ball(make_point(make_rational(cy_, den_), make_rational(cx_, den_)),
                             make_rational(rad_, den_), kind_);
    ++checks_;
    std::string key = to_string(ball.center.r) + "," + to_string(ball.center.delta) + "," + to_string(ball.radius);
    if (!emitted_.count(key) && prover_(ball, stage_)) {
      emitted_.insert(std::move(key));
      out.push_back(std::move(ball));
    }
    // Advance (stage, den, radius, cx, cy) in lexicographic order.
    if (++cy_ <= 2 * den_) continue;
    cy_ = -den_;
    if (++cx_ <= 2 * den_) continue;
    if (++rad_ <= std::min<long>(stage_, 3 * den_)) {
      cx_ = -den_;
      continue;
    }
    if (++den_ <= static_cast<long>(stage_)) {
      rad_ = 1;
      cx_ = cy_ = -den_;
      continue;
    }
    ++stage_;
    den_ = 1;
    rad_ = 1;
    cx_ = cy_ = -1;
  }
  return out;
}

REPresentation re_from_dense_points(PointStream stream) {
  auto prover = [stream = std::move(stream)](const RatBall& ball, unsigned stage) {
    for (std::size_t k = 0; k < stage; ++k) {
      auto p = stream(k);
      if (!p) return false;
      if (ball_contains(ball, *p)) return true;
    }
    return false;
  };
  return REPresentation("dense-points", std::move(prover));
}

long stage_precision(unsigned stage) {
  if (stage < 1) stage = 1;
  return 32L << (std::min(stage, kMaxStage) - 1);
}

namespace {

void require_continuous(const BoundCurve& curve) {
  if (!curve.continuous()) {
    throw ContractViolation("effective set presentations need a continuous curve; " + curve.name() + " is not");
  }
}

}  // namespace

CoREPresentation core_from_curve(const BoundCurve& curve) {
  require_continuous(curve);
  auto prover = [curve](const RatBall& ball, unsigned stage) {
    RatInterval dr = ball.delta_range();
    RatInterval rr = ball.rate_range();
    if (dr.lo() > 1 || dr.hi() < 0) return true;
    const long bits = stage_precision(stage);
    // f is non-increasing and continuous: its image of [a', b'] is [f(b'), f(a')].
    if (curve.eval(max_of(Rational(0), dr.lo()), bits).hi() < rr.lo()) return true;
    return curve.eval(min_of(Rational(1), dr.hi()), bits).lo() > rr.hi();
  };
  return CoREPresentation("graph:" + curve.name(), std::move(prover), curve.exact());
}

REPresentation re_from_curve(const BoundCurve& curve) {
  require_continuous(curve);
  auto prover = [curve](const RatBall& ball, unsigned stage) {
    RatInterval dr = ball.delta_range();
    RatInterval rr = ball.rate_range();
    if (dr.lo() >= 1 || dr.hi() <= 0) return false;
    const long bits = stage_precision(stage);
    const Rational lo = max_of(Rational(0), dr.lo());
    const Rational hi = min_of(Rational(1), dr.hi());
    const long pieces = 1L << std::min(stage, kMaxStage + 2);
    // Samples inside (a, b) ∩ [0, 1]; an endpoint counts only when it belongs.
    for (long k = 0; k <= pieces; ++k) {
      if (k == 0 && !(dr.lo() < 0)) continue;
      if (k == pieces && !(dr.hi() > 1)) continue;
      Rational x = lo + (hi - lo) * make_rational(k, pieces);
      RatInterval v = curve.eval(x, bits);
      if (v.lo() > rr.lo() && v.hi() < rr.hi()) return true;
    }
    return false;
  };
  return REPresentation("graph:" + curve.name(), std::move(prover));
}

REPresentation domain_re_from_curve(const BoundCurve& curve) {
  require_continuous(curve);
  auto prover = [curve](const RatBall& ball, unsigned stage) {
    RatInterval dr = ball.delta_range();
    RatInterval rr = ball.rate_range();
    if (dr.lo() >= 1 || dr.hi() <= 0 || rr.hi() <= 0) return false;
    // sup of f over (a, b) ∩ [0, 1] is f(max(a, 0)) by continuity.
    return curve.eval(max_of(Rational(0), dr.lo()), stage_precision(stage)).lo() > rr.lo();
  };
  return REPresentation("domain:" + curve.name(), std::move(prover), curve.exact());
}

CoREPresentation domain_core_from_curve(const BoundCurve& curve) {
  require_continuous(curve);
  auto prover = [curve](const RatBall& ball, unsigned stage) {
    RatInterval dr = ball.delta_range();
    RatInterval rr = ball.rate_range();
    if (dr.lo() > 1 || dr.hi() < 0 || rr.hi() < 0) return true;
    return curve.eval(max_of(Rational(0), dr.lo()), stage_precision(stage)).hi() < rr.lo();
  };
  return CoREPresentation("domain:" + curve.name(), std::move(prover), curve.exact());
}

NStrip make_strip(std::int64_t n_grid, std::vector<GridBall> balls) {
  if (n_grid < 1) throw ContractViolation("grid size must be positive");
  NStrip s;
  s.n_grid = n_grid;
  std::sort(balls.begin(), balls.end());
  std::vector<std::int64_t> counts(n_grid, 0);
  s.columns.assign(n_grid, ColumnRange{});
  for (const auto& b : balls) {
    if (b.n_grid != n_grid || b.i < 0 || b.i >= n_grid || b.j < 0 || b.j >= n_grid) {
      throw ContractViolation("strip ball outside the N-grid");
    }
    auto& c = s.columns[b.i];
    if (counts[b.i]++ == 0) {
      c.lo = c.hi = b.j;
    } else {
      c.lo = std::min(c.lo, b.j);
      c.hi = std::max(c.hi, b.j);
    }
    if ((b.i == 0 && b.j == n_grid - 1) || (b.i == n_grid - 1 && b.j == 0)) s.touches_corner = true;
  }
  s.balls = std::move(balls);

  s.connected = true;
  for (std::int64_t i = 0; i < n_grid; ++i) {
    const auto& c = s.columns[i];
    if (counts[i] == 0 || counts[i] != c.hi - c.lo + 1) s.connected = false;
    if (i > 0 && counts[i] && counts[i - 1]) {
      const auto& p = s.columns[i - 1];
      if (c.lo > p.hi + 1 || p.lo > c.hi + 1) s.connected = false;
    }
  }
  const Rational step_n = make_rational(1, n_grid);
  for (std::int64_t i = 0; i < n_grid; ++i) {
    if (counts[i] == 0) continue;
    const auto& c = s.columns[i];
    Rational x0 = i * step_n;
    Rational x1 = (i + 1) * step_n;
    Rational top = (c.hi + 1) * step_n;
    Rational bottom = c.lo * step_n;
    s.upper.push_back(make_point(top, x0));
    s.upper.push_back(make_point(top, x1));
    s.lower.push_back(make_point(bottom, x0));
    s.lower.push_back(make_point(bottom, x1));
  }
  // The vertical end segments join the chains they continue: the left edge of
  // the first column belongs to the lower-left boundary, the right edge of the
  // last column to the upper-right one. Without them a curve that is steep at
  // an end (VG near delta = 0) spans several rows in that column and the two
  // chains drift apart there.
  if (counts[0] && counts[n_grid - 1]) {
    s.lower.insert(s.lower.begin(), make_point((s.columns[0].hi + 1) * step_n, Rational(0)));
    s.upper.push_back(make_point(s.columns[n_grid - 1].lo * step_n, Rational(1)));
  }
  if (s.connected) {
    const Rational step = make_rational(1, 4 * n_grid);
    const Rational limit = 2 * step_n;
    s.width_ok = directed_distance_sampled(s.lower, s.upper, step) <= limit &&
                 directed_distance_sampled(s.upper, s.lower, step) <= limit;
  }
  return s;
}

namespace {

class Clock {
 public:
  explicit Clock(std::uint64_t limit) : limit_(limit), start_(std::chrono::steady_clock::now()) {}
  bool expired() const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    return static_cast<std::uint64_t>(ms.count()) > limit_;
  }

 private:
  std::uint64_t limit_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

StripResult build_strip(const CoREPresentation& co, std::int64_t n_grid, std::uint64_t timeout_millis) {
  if (n_grid < 1) throw ContractViolation("grid size must be positive");
  Clock clock(timeout_millis);
  const auto squares = grid_balls(n_grid);
  std::vector<char> disjoint(squares.size(), 0);
  StripResult out;
  out.status = "stage cap reached";
  bool timed_out = false;
  for (unsigned stage = 1; stage <= kMaxStage && !timed_out; ++stage) {
    bool changed = false;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (disjoint[k]) continue;
      if (clock.expired()) {
        timed_out = true;
        break;
      }
      if (co.prove(squares[k].to_ball(BallKind::Closed), stage)) {
        disjoint[k] = 1;
        changed = true;
      }
    }
    if (timed_out) break;
    ++out.rounds;
    std::vector<GridBall> rest;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (!disjoint[k]) rest.push_back(squares[k]);
    }
    out.strip = make_strip(n_grid, std::move(rest));
    if (out.strip.connected && out.strip.width_ok) {
      out.status = "valid strip";
      break;
    }
    if (co.stage_independent() || (!changed && stage > 1)) {
      out.status = out.strip.connected ? "stable; boundary width exceeds 2/N" : "stable; not a connected strip";
      break;
    }
  }
  if (timed_out) {
    out.status = "timeout";
    std::vector<GridBall> rest;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (!disjoint[k]) rest.push_back(squares[k]);
    }
    out.strip = make_strip(n_grid, std::move(rest));
  }
  out.complete = out.strip.connected && out.strip.width_ok;
  return out;
}

const char* to_string(PointSide side) {
  switch (side) {
    case PointSide::Below:
      return "below";
    case PointSide::Inside:
      return "inside";
    case PointSide::Above:
      return "above";
  }
  return "unknown";
}

std::vector<PointSide> classify_points(const std::vector<RatPoint>& points, const NStrip& strip) {
  if (!strip.connected) throw ContractViolation("classify_points needs a connected strip");
  const std::int64_t n = strip.n_grid;
  std::vector<PointSide> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.delta < 0 || p.delta > 1 || p.r < 0 || p.r > 1) {
      throw ContractViolation("classify_points: point outside the unit square");
    }
    // Grid squares whose closure holds the point: one or two columns, one or
    // two rows. The point is decided as soon as one of them is proven
    // disjoint from the curve, i.e. lies outside the strip.
    auto span = [n](const Rational& scaled) {
      std::int64_t k = std::min<std::int64_t>(floor_of(scaled).get_si(), n - 1);
      std::vector<std::int64_t> out{k};
      if (scaled.get_den() == 1 && k > 0 && scaled == k) out.insert(out.begin(), k - 1);
      return out;
    };
    std::optional<PointSide> side;
    for (auto c : span(p.delta * n)) {
      const auto& range = strip.columns[c];
      for (auto row : span(p.r * n)) {
        if (row < range.lo) side = PointSide::Below;
        else if (row > range.hi) side = PointSide::Above;
        if (side) break;
      }
      if (side) break;
    }
    out.push_back(side.value_or(PointSide::Inside));
  }
  return out;
}

bool is_admissible(const std::vector<GridBall>& balls) {
  for (std::size_t a = 0; a < balls.size(); ++a) {
    for (std::size_t b = a + 1; b < balls.size(); ++b) {
      const auto& x = balls[a];
      const auto& y = balls[b];
      if (x.i == y.i || x.j == y.j) return false;
      if ((x.i < y.i) != (x.j > y.j)) return false;
    }
  }
  return true;
}

namespace {

enum : char { kUndecided = 0, kUpper = 1, kLower = 2 };

bool touches_any(const GridBall& b, const std::vector<GridBall>& set) {
  return std::any_of(set.begin(), set.end(), [&](const GridBall& o) { return grid_closures_intersect(b, o); });
}

struct Amended {
  std::vector<GridBall> exceptional, to_upper, to_lower;
};

Amended amend(const std::vector<GridBall>& x, const std::vector<GridBall>& upper, const std::vector<GridBall>& lower) {
  Amended a;
  std::vector<GridBall> rest;
  for (const auto& b : x) {
    if (touches_any(b, lower)) {
      rest.push_back(b);
    } else {
      a.to_upper.push_back(b);
    }
  }
  for (const auto& b : rest) {
    if (touches_any(b, upper)) {
      a.exceptional.push_back(b);
    } else {
      a.to_lower.push_back(b);
    }
  }
  return a;
}

}  // namespace

ApproxResult two_sided_approx(const REPresentation& re, const CoREPresentation& co, std::int64_t n_grid,
                              std::uint64_t timeout_millis) {
  if (n_grid < 1) throw ContractViolation("grid size must be positive");
  Clock clock(timeout_millis);
  const auto squares = grid_balls(n_grid);
  std::vector<char> state(squares.size(), kUndecided);
  ApproxResult out;
  out.set.n_grid = n_grid;
  out.status = "stage cap reached";
  bool timed_out = false;
  const bool exact = re.stage_independent() && co.stage_independent();

  auto collect = [&](char which) {
    std::vector<GridBall> v;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (state[k] == which) v.push_back(squares[k]);
    }
    return v;
  };

  for (unsigned stage = 1; stage <= kMaxStage; ++stage) {
    bool changed = false;
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (state[k] != kUndecided) continue;
      if (clock.expired()) {
        timed_out = true;
        break;
      }
      if (co.prove(squares[k].to_ball(BallKind::Closed), stage)) {
        state[k] = kUpper;
        changed = true;
      } else if (re.prove(squares[k].to_ball(BallKind::Open), stage)) {
        state[k] = kLower;
        changed = true;
      }
    }
    if (timed_out) break;
    ++out.rounds;
    if (is_admissible(amend(collect(kUndecided), collect(kUpper), collect(kLower)).exceptional)) {
      out.status = "admissible";
      break;
    }
    if (exact || (!changed && stage > 1)) {
      out.status = "stable";
      break;
    }
  }

  out.unamended = collect(kUndecided);
  out.set.upper = collect(kUpper);
  out.set.lower = collect(kLower);
  Amended a = amend(out.unamended, out.set.upper, out.set.lower);
  out.set.exceptional = a.exceptional;
  out.set.upper.insert(out.set.upper.end(), a.to_upper.begin(), a.to_upper.end());
  out.set.lower.insert(out.set.lower.end(), a.to_lower.begin(), a.to_lower.end());
  std::sort(out.set.upper.begin(), out.set.upper.end());
  std::sort(out.set.lower.begin(), out.set.lower.end());
  if (timed_out) {
    out.status = "timeout";
    out.complete = false;
    return out;
  }
  if (!is_admissible(out.set.exceptional)) {
    throw InternalContractError("two_sided_approx: exceptional set is not N-admissible; the input is not a monotone domain");
  }
  out.complete = true;
  return out;
}

CurveEstimate curve_estimate(const AdmissibleSet& adm) {
  const std::int64_t n = adm.n_grid;
  if (!is_admissible(adm.exceptional)) throw ContractViolation("curve_estimate needs an admissible set");
  CurveEstimate e;
  e.error_bound = make_rational(1, n);
  std::vector<std::int64_t> lowest_upper(n, n), highest_lower(n, -1);
  for (const auto& b : adm.upper) lowest_upper[b.i] = std::min(lowest_upper[b.i], b.j);
  for (const auto& b : adm.lower) highest_lower[b.i] = std::max(highest_lower[b.i], b.j);
  for (std::int64_t i = 0; i < n; ++i) {
    Rational up = make_rational(lowest_upper[i], n);
    Rational lo = make_rational(std::max<std::int64_t>(highest_lower[i], 0), n);
    Rational x0 = make_rational(i, n);
    Rational x1 = make_rational(i + 1, n);
    e.upper.push_back(make_point(up, x0));
    e.upper.push_back(make_point(up, x1));
    e.lower.push_back(make_point(lo, x0));
    e.lower.push_back(make_point(lo, x1));
    e.upper_values.push_back(std::move(up));
    e.lower_values.push_back(std::move(lo));
  }
  for (const auto& b : adm.exceptional) e.ball_estimates.push_back(b.lower_left());
  return e;
}

}  // namespace codedomain
