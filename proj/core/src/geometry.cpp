#include "codedomain/geometry.hpp"

#include "codedomain/errors.hpp"

namespace codedomain {

namespace {

Rational distance_to_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
  // Parametrize the segment a + t (b - a), t in [0, 1]. The max-metric
  // distance max(|dx(t)|, |dy(t)|) is convex piecewise linear in t, so its
  // minimum is at t = 0, t = 1, or where a component vanishes or the two
  // absolute values cross.
  Rational ddelta = b.delta - a.delta;
  Rational dr = b.r - a.r;
  Rational ex = p.delta - a.delta;
  Rational ey = p.r - a.r;

  std::vector<Rational> candidates = {Rational(0), Rational(1)};
  if (ddelta != 0) candidates.emplace_back(ex / ddelta);
  if (dr != 0) candidates.emplace_back(ey / dr);
  // |ex - t ddelta| = |ey - t dr|  <=>  ex - t ddelta = +-(ey - t dr)
  if (ddelta != dr) candidates.emplace_back((ex - ey) / (ddelta - dr));
  if (ddelta != -dr) candidates.emplace_back((ex + ey) / (ddelta + dr));

  bool first = true;
  Rational best;
  for (const auto& t_raw : candidates) {
    Rational t = t_raw;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Rational x = ex - t * ddelta;
    Rational y = ey - t * dr;
    Rational d = max_of(abs_of(x), abs_of(y));
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

}  // namespace

RatPoint make_point(const Rational& r, const Rational& delta) { return RatPoint{r, delta}; }

Rational max_distance(const RatPoint& a, const RatPoint& b) {
  return max_of(abs_of(Rational(a.r - b.r)), abs_of(Rational(a.delta - b.delta)));
}

RatInterval RatBall::delta_range() const {
  return RatInterval(center.delta - radius, center.delta + radius);
}

RatInterval RatBall::rate_range() const { return RatInterval(center.r - radius, center.r + radius); }

RatBall make_ball(const RatPoint& center, const Rational& radius, BallKind kind) {
  if (radius < 0) throw ContractViolation("ball radius must be nonnegative");
  return RatBall{center, radius, kind};
}

RatBall ball_from_ranges(const RatInterval& delta_range, const RatInterval& rate_range,
                         BallKind kind) {
  if (delta_range.width() != rate_range.width()) {
    throw ContractViolation("max-metric balls are squares; ranges must have equal width");
  }
  return make_ball(make_point(rate_range.midpoint(), delta_range.midpoint()),
                   Rational(delta_range.width() / 2), kind);
}

bool ball_contains(const RatBall& ball, const RatPoint& p) {
  Rational d = max_distance(ball.center, p);
  return ball.kind == BallKind::Open ? d < ball.radius : d <= ball.radius;
}

bool balls_closures_intersect(const RatBall& a, const RatBall& b) {
  Rational reach = a.radius + b.radius;
  return abs_of(Rational(a.center.delta - b.center.delta)) <= reach &&
         abs_of(Rational(a.center.r - b.center.r)) <= reach;
}

RatInterval GridBall::delta_range() const {
  return RatInterval(make_rational(i, n_grid), make_rational(i + 1, n_grid));
}

RatInterval GridBall::rate_range() const {
  return RatInterval(make_rational(j, n_grid), make_rational(j + 1, n_grid));
}

RatBall GridBall::to_ball(BallKind kind) const {
  return RatBall{make_point(make_rational(2 * j + 1, 2 * n_grid), make_rational(2 * i + 1, 2 * n_grid)),
                 make_rational(1, 2 * n_grid), kind};
}

RatPoint GridBall::lower_left() const {
  return make_point(make_rational(j, n_grid), make_rational(i, n_grid));
}

std::vector<GridBall> grid_balls(std::int64_t n_grid) {
  if (n_grid < 1) throw ContractViolation("grid resolution N must be >= 1");
  std::vector<GridBall> out;
  out.reserve(static_cast<std::size_t>(n_grid * n_grid));
  for (std::int64_t j = 0; j < n_grid; ++j) {
    for (std::int64_t i = 0; i < n_grid; ++i) out.push_back(GridBall{n_grid, i, j});
  }
  return out;
}

bool grid_closures_intersect(const GridBall& a, const GridBall& b) {
  if (a.n_grid == b.n_grid) {
    auto di = a.i - b.i;
    auto dj = a.j - b.j;
    return di >= -1 && di <= 1 && dj >= -1 && dj <= 1;
  }
  return balls_closures_intersect(a.to_ball(), b.to_ball());
}

Rational distance_to_polyline(const RatPoint& p, const Polyline& line) {
  if (line.empty()) throw ContractViolation("distance to an empty polyline");
  Rational best = max_distance(p, line.front());
  for (std::size_t k = 1; k < line.size(); ++k) {
    Rational d = distance_to_segment(p, line[k - 1], line[k]);
    if (d < best) best = d;
  }
  return best;
}

Rational directed_distance_sampled(const Polyline& from, const Polyline& to, const Rational& step) {
  if (from.empty() || to.empty()) throw ContractViolation("directed distance with an empty polyline");
  if (step <= 0) throw ContractViolation("sampling step must be positive");
  Rational worst = distance_to_polyline(from.front(), to);
  for (std::size_t k = 1; k < from.size(); ++k) {
    const RatPoint& a = from[k - 1];
    const RatPoint& b = from[k];
    Rational len = max_distance(a, b);
    BigInt pieces = ceil_of(Rational(len / step));
    if (pieces == 0) pieces = 1;
    for (BigInt s = 1; s <= pieces; ++s) {
      Rational t = make_rational(s, pieces);
      RatPoint p = make_point(Rational(a.r + t * (b.r - a.r)), Rational(a.delta + t * (b.delta - a.delta)));
      Rational d = distance_to_polyline(p, to);
      if (worst < d) worst = d;
    }
  }
  return worst;
}

}  // namespace codedomain
