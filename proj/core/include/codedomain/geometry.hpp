#pragma once

#include <cstdint>
#include <vector>

#include "codedomain/rational.hpp"

namespace codedomain {

/// A point of the (R, delta) plane. `r` is the rate axis (vertical in plots),
/// `delta` the relative-distance axis (horizontal). Points may lie outside the
/// unit square.
struct RatPoint {
  Rational r;
  Rational delta;

  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.r == b.r && a.delta == b.delta;
  }
};

RatPoint make_point(const Rational& r, const Rational& delta);

/// Chebyshev (max) distance between two points.
Rational max_distance(const RatPoint& a, const RatPoint& b);

enum class BallKind { Open, Closed };

/// A ball of the max metric: an axis-aligned square around `center`.
struct RatBall {
  RatPoint center;
  Rational radius;
  BallKind kind = BallKind::Closed;

  RatInterval delta_range() const;
  RatInterval rate_range() const;
  RatBall closure() const { return RatBall{center, radius, BallKind::Closed}; }
};

RatBall make_ball(const RatPoint& center, const Rational& radius, BallKind kind);
/// Builds the square delta_range x rate_range; both ranges must have equal width.
RatBall ball_from_ranges(const RatInterval& delta_range, const RatInterval& rate_range,
                         BallKind kind);

bool ball_contains(const RatBall& ball, const RatPoint& p);
/// True iff the closed squares overlap; touching along an edge or at a corner
/// counts.
bool balls_closures_intersect(const RatBall& a, const RatBall& b);

/// Closed square [i/N,(i+1)/N] x [j/N,(j+1)/N]; i indexes the delta axis
/// (columns), j the rate axis (rows).
struct GridBall {
  std::int64_t n_grid = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;

  RatInterval delta_range() const;
  RatInterval rate_range() const;
  RatBall to_ball(BallKind kind = BallKind::Closed) const;
  /// The lower-left corner (i/N, j/N).
  RatPoint lower_left() const;

  friend bool operator==(const GridBall&, const GridBall&) = default;
  friend auto operator<=>(const GridBall&, const GridBall&) = default;
};

/// All N^2 grid squares of the unit square, row-major: rows j = 0..N-1 outer,
/// columns i = 0..N-1 inner.
std::vector<GridBall> grid_balls(std::int64_t n_grid);

/// Closed squares of two grid balls (possibly of different N) overlap.
bool grid_closures_intersect(const GridBall& a, const GridBall& b);

using Polyline = std::vector<RatPoint>;

/// Max-metric distance from a point to a polyline (exact). The polyline must
/// have at least one vertex.
Rational distance_to_polyline(const RatPoint& p, const Polyline& line);

/// Largest distance from any point of `from` to `to`, evaluated at every
/// multiple of `step` along each segment of `from` plus its vertices. For
/// axis-aligned polylines whose vertices lie on a 1/N grid, step = 1/(4N)
/// makes the result exact.
Rational directed_distance_sampled(const Polyline& from, const Polyline& to, const Rational& step);

}  // namespace codedomain
