#include <gtest/gtest.h>

#include <random>

#include "codedomain/errors.hpp"
#include "codedomain/geometry.hpp"

using namespace codedomain;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }
RatPoint P(Rational r, Rational delta) { return make_point(r, delta); }

Rational random_rational(std::mt19937_64& rng) {
  long den = static_cast<long>(rng() % 97) + 1;
  long num = static_cast<long>(rng() % (3 * den + 1)) - den;
  return make_rational(num, den);
}

}  // namespace

TEST(Rational, CanonicalFormAndParsing) {
  EXPECT_EQ(to_string(R(2, 4)), "1/2");
  EXPECT_EQ(to_string(R(-3, -6)), "1/2");
  EXPECT_EQ(to_string(R(4, 2)), "2");
  EXPECT_EQ(parse_rational("-6/8"), R(-3, 4));
  EXPECT_EQ(parse_rational("7"), R(7));
  EXPECT_THROW(parse_rational("1/0"), ContractViolation);
  EXPECT_THROW(parse_rational("abc"), ContractViolation);
}

TEST(Rational, ArithmeticIsExact) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng);
    EXPECT_EQ(Rational(a + b - b), a);
    if (b != 0) EXPECT_EQ(Rational(a * b / b), a);
  }
}

TEST(RatInterval, RoundOutwardKeepsEnclosure) {
  RatInterval x(R(1, 3), R(2, 3));
  RatInterval y = round_outward(x, 10);
  EXPECT_LE(y.lo(), x.lo());
  EXPECT_GE(y.hi(), x.hi());
  EXPECT_LE(y.width(), x.width() + pow2(-9));
  EXPECT_THROW(RatInterval(R(1), R(0)), ContractViolation);
}

TEST(MaxDistance, Examples) {
  EXPECT_EQ(max_distance(P(R(0), R(0)), P(R(0), R(0))), R(0));
  EXPECT_EQ(max_distance(P(R(0), R(0)), P(R(1, 2), R(1, 3))), R(1, 2));
  EXPECT_EQ(max_distance(P(R(1, 4), R(3, 4)), P(R(3, 4), R(1, 4))), R(1, 2));
}

TEST(MaxDistance, MetricAxioms) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    RatPoint a = P(random_rational(rng), random_rational(rng));
    RatPoint b = P(random_rational(rng), random_rational(rng));
    RatPoint c = P(random_rational(rng), random_rational(rng));
    EXPECT_GE(max_distance(a, b), 0);
    EXPECT_EQ(max_distance(a, b) == 0, a == b);
    EXPECT_EQ(max_distance(a, b), max_distance(b, a));
    EXPECT_LE(max_distance(a, c), max_distance(a, b) + max_distance(b, c));
  }
}

TEST(Balls, Containment) {
  RatBall closed = make_ball(P(R(1, 2), R(1, 2)), R(1, 2), BallKind::Closed);
  RatBall open = make_ball(P(R(1, 2), R(1, 2)), R(1, 2), BallKind::Open);
  EXPECT_TRUE(ball_contains(closed, P(R(0), R(0))));
  EXPECT_FALSE(ball_contains(open, P(R(0), R(0))));
  EXPECT_TRUE(ball_contains(make_ball(P(R(0), R(0)), R(1), BallKind::Open), P(R(1, 3), R(1, 3))));
}

TEST(Balls, ClosuresIntersect) {
  RatBall a = make_ball(P(R(1, 2), R(1, 2)), R(1, 2), BallKind::Open);
  RatBall edge = make_ball(P(R(1, 2), R(3, 2)), R(1, 2), BallKind::Open);
  RatBall far = make_ball(P(R(1, 2), R(13, 8)), R(1, 2), BallKind::Closed);
  RatBall nested = make_ball(P(R(1, 2), R(1, 2)), R(1, 8), BallKind::Closed);
  EXPECT_TRUE(balls_closures_intersect(a, edge));
  EXPECT_FALSE(balls_closures_intersect(a, far));
  EXPECT_TRUE(balls_closures_intersect(a, nested));
}

TEST(Grid, BallsTileTheSquare) {
  EXPECT_EQ(grid_balls(1).size(), 1u);
  EXPECT_EQ(grid_balls(2).size(), 4u);
  auto g4 = grid_balls(4);
  ASSERT_EQ(g4.size(), 16u);
  // Row-major: rows j outer, columns i inner.
  EXPECT_EQ(g4[1].i, 1);
  EXPECT_EQ(g4[1].j, 0);
  GridBall corner{4, 0, 3};
  EXPECT_EQ(corner.delta_range(), RatInterval(R(0), R(1, 4)));
  EXPECT_EQ(corner.rate_range(), RatInterval(R(3, 4), R(1)));

  // Cover: every rational point of the square lies in some ball; areas sum to 1.
  std::mt19937_64 rng(3);
  for (std::int64_t n : {1, 3, 5, 8}) {
    auto balls = grid_balls(n);
    Rational area = 0;
    for (const auto& b : balls) area += b.delta_range().width() * b.rate_range().width();
    EXPECT_EQ(area, R(1));
    for (int t = 0; t < 100; ++t) {
      RatPoint p = P(make_rational(static_cast<long>(rng() % 101), 100), make_rational(static_cast<long>(rng() % 101), 100));
      bool covered = false;
      for (const auto& b : balls) covered = covered || ball_contains(b.to_ball(), p);
      EXPECT_TRUE(covered);
    }
  }
}

TEST(Grid, AdjacentClosuresMeetOnlyAlongEdges) {
  for (std::int64_t n : {2, 4, 7}) {
    for (const auto& a : grid_balls(n)) {
      for (const auto& b : grid_balls(n)) {
        bool neighbours = std::abs(a.i - b.i) <= 1 && std::abs(a.j - b.j) <= 1;
        EXPECT_EQ(grid_closures_intersect(a, b), neighbours);
        if (neighbours && !(a == b)) {
          // Overlap has zero area.
          RatInterval dx = a.delta_range(), dy = a.rate_range();
          RatInterval ex = b.delta_range(), ey = b.rate_range();
          Rational w = min_of(dx.hi(), ex.hi()) - max_of(dx.lo(), ex.lo());
          Rational h = min_of(dy.hi(), ey.hi()) - max_of(dy.lo(), ey.lo());
          EXPECT_EQ(w * h, 0);
        }
      }
    }
  }
}

TEST(Polyline, DistanceToPolyline) {
  Polyline diag{P(R(1), R(0)), P(R(0), R(1))};
  EXPECT_EQ(distance_to_polyline(P(R(1, 2), R(1, 2)), diag), R(0));
  EXPECT_EQ(distance_to_polyline(P(R(0), R(0)), diag), R(1, 2));
  EXPECT_EQ(distance_to_polyline(P(R(1), R(1)), diag), R(1, 2));
}

TEST(Polyline, DirectedDistanceMatchesDenseSampling) {
  // Staircases on a 1/4 grid; compare with a much finer sampling.
  Polyline a{P(R(1), R(0)), P(R(1), R(1, 4)), P(R(1, 2), R(1, 4)), P(R(1, 2), R(1))};
  Polyline b{P(R(3, 4), R(0)), P(R(3, 4), R(1, 2)), P(R(0), R(1, 2)), P(R(0), R(1))};
  Rational coarse = directed_distance_sampled(a, b, R(1, 16));
  Rational fine = directed_distance_sampled(a, b, R(1, 256));
  EXPECT_EQ(coarse, fine);
}
