#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "codedomain/errors.hpp"
#include "codedomain/effective_sets.hpp"
#include "codedomain/search.hpp"

using namespace codedomain;

namespace {

Polyline line(const Rational& r0, const Rational& r1) {
  return {make_point(r0, Rational(0)), make_point(r1, Rational(1))};
}

BoundCurve diag() { return BoundCurve::polyline(line(Rational(1), Rational(0))); }
BoundCurve flat(const Rational& r) { return BoundCurve::polyline(line(r, r)); }

RatBall square(const Rational& d0, const Rational& d1, const Rational& r0, const Rational& r1, BallKind kind) {
  return ball_from_ranges(RatInterval(d0, d1), RatInterval(r0, r1), kind);
}

// Ground truth for the segment R = 1 - delta, 0 <= delta <= 1.
bool closed_meets_diagonal(const RatBall& b) {
  RatInterval dr = b.delta_range(), rr = b.rate_range();
  Rational a = max_of(dr.lo(), Rational(0)), c = min_of(dr.hi(), Rational(1));
  if (a > c) return false;
  return a + rr.lo() <= 1 && 1 <= c + rr.hi();
}

bool open_meets_diagonal(const RatBall& b) {
  RatInterval dr = b.delta_range(), rr = b.rate_range();
  Rational lo = max_of(dr.lo(), 1 - rr.hi()), hi = min_of(dr.hi(), 1 - rr.lo());
  return lo < hi && lo < 1 && hi > 0;
}

// Side of a point relative to the diagonal: -1 below, 0 on, 1 above.
int diagonal_side(const RatPoint& p) {
  Rational s = p.r + p.delta - 1;
  return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

std::vector<GridBall> diagonal_band(std::int64_t n) {
  std::vector<GridBall> out;
  for (const auto& b : grid_balls(n))
    if (b.i + b.j >= n - 2 && b.i + b.j <= n) out.push_back(b);
  return out;
}

std::vector<GridBall> sorted(std::vector<GridBall> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Presentations, CurveExamples) {
  Rational z(0), q8 = make_rational(1, 8), q4 = make_rational(1, 4);
  EXPECT_TRUE(core_from_curve(diag()).prove(square(z, q4, z, q4, BallKind::Closed), 1));
  EXPECT_TRUE(re_from_curve(diag()).prove(GridBall{4, 1, 2}.to_ball(BallKind::Open), 1));
  EXPECT_FALSE(core_from_curve(diag()).prove(GridBall{4, 1, 2}.to_ball(BallKind::Closed), 5));
  EXPECT_TRUE(core_from_curve(BoundCurve::vg(2)).prove(square(z, q8, z, q8, BallKind::Closed), 1));
  EXPECT_TRUE(core_from_curve(diag()).stage_independent());
  EXPECT_FALSE(core_from_curve(BoundCurve::vg(2)).stage_independent());
  EXPECT_THROW(core_from_curve(BoundCurve::singleton(2)), ContractViolation);
  EXPECT_EQ(stage_precision(1), 32);
  EXPECT_EQ(stage_precision(3), 128);
}

TEST(Presentations, SoundOnTheDiagonal) {
  auto co = core_from_curve(diag());
  auto re = re_from_curve(diag());
  auto co_balls = co.next(20000);
  auto re_balls = re.next(20000);
  EXPECT_FALSE(co_balls.empty());
  EXPECT_FALSE(re_balls.empty());
  for (const auto& b : co_balls) {
    EXPECT_EQ(b.kind, BallKind::Closed);
    EXPECT_FALSE(closed_meets_diagonal(b));
  }
  for (const auto& b : re_balls) {
    EXPECT_EQ(b.kind, BallKind::Open);
    EXPECT_TRUE(open_meets_diagonal(b));
  }
  // Resuming never repeats a ball.
  auto more = co.next(20000);
  for (const auto& b : more) {
    bool seen = std::any_of(co_balls.begin(), co_balls.end(), [&](const RatBall& c) {
      return c.center == b.center && c.radius == b.radius;
    });
    EXPECT_FALSE(seen);
  }
  EXPECT_EQ(co.progress(), 40000u);
}

TEST(Presentations, DomainSoundOnTheDiagonal) {
  auto co = domain_core_from_curve(diag());
  auto re = domain_re_from_curve(diag());
  for (const auto& b : grid_balls(8)) {
    // U = {R <= 1 - delta} inside the unit square.
    Rational c = b.rate_range().lo(), a = b.delta_range().lo();
    bool closed_meets = a + c <= 1;
    bool open_meets = a + c < 1;
    if (co.prove(b.to_ball(BallKind::Closed), 1)) EXPECT_FALSE(closed_meets);
    else EXPECT_TRUE(closed_meets);
    if (re.prove(b.to_ball(BallKind::Open), 1)) EXPECT_TRUE(open_meets);
    else EXPECT_FALSE(open_meets);
  }
}

TEST(DensePoints, Examples) {
  auto empty = re_from_dense_points([](std::size_t) { return std::optional<RatPoint>{}; });
  EXPECT_TRUE(empty.next(5000).empty());

  RatPoint half = make_point(make_rational(1, 2), make_rational(1, 2));
  auto constant = re_from_dense_points([&](std::size_t) { return std::optional<RatPoint>{half}; });
  auto balls = constant.next(5000);
  EXPECT_FALSE(balls.empty());
  for (const auto& b : balls) EXPECT_TRUE(ball_contains(b, half));

  PointCloud cloud = enumerate_point_cloud(2, 8, {Provenance::ExhaustiveLinear}, SearchBudget{});
  std::vector<RatPoint> points;
  for (const auto& e : cloud.entries)
    if (e.params.n == 7 && e.params.d == 3) points.push_back(e.point.as_point());
  RatPoint hamming = make_point(make_rational(4, 7), make_rational(3, 7));
  auto stream = re_from_dense_points([&](std::size_t i) {
    return i < points.size() ? std::optional<RatPoint>{points[i]} : std::nullopt;
  });
  bool found = false;
  for (int round = 0; round < 20 && !found; ++round) {
    for (const auto& b : stream.next(5000)) found = found || ball_contains(b, hamming);
  }
  EXPECT_TRUE(found);
}

TEST(Strip, DiagonalAtFour) {
  auto r = build_strip(core_from_curve(diag()), 4, 10000);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.strip.balls, sorted(diagonal_band(4)));
  EXPECT_TRUE(r.strip.connected);
  EXPECT_TRUE(r.strip.width_ok);
  EXPECT_TRUE(r.strip.touches_corner);
}

TEST(Strip, DiagonalAtLargerGrids) {
  for (std::int64_t n : {16, 64}) {
    auto r = build_strip(core_from_curve(diag()), n, 10000);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.strip.balls, sorted(diagonal_band(n)));
    Rational w = make_rational(2, n);
    Rational step = make_rational(1, 4 * n);
    EXPECT_LE(directed_distance_sampled(r.strip.upper, r.strip.lower, step), w);
    EXPECT_LE(directed_distance_sampled(r.strip.lower, r.strip.upper, step), w);
  }
}

TEST(Strip, ConstantHalfAtTwo) {
  auto r = build_strip(core_from_curve(flat(make_rational(1, 2))), 2, 10000);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.strip.balls.size(), 4u);
}

TEST(Strip, VarshamovGilbertAtSixteen) {
  auto r = build_strip(core_from_curve(BoundCurve::vg(2)), 16, 30000);
  EXPECT_TRUE(r.strip.connected);
  EXPECT_TRUE(r.strip.width_ok) << r.status;
  EXPECT_TRUE(r.complete);
  // Every square the curve passes through stays in the strip.
  BoundCurve vg = BoundCurve::vg(2);
  for (int i = 0; i < 16; ++i) {
    Rational x = make_rational(2 * i + 1, 32);
    RatInterval v = vg.eval(x, 60);
    std::int64_t j = std::min<std::int64_t>(15, floor_of(v.lo() * 16).get_si());
    EXPECT_TRUE(std::binary_search(r.strip.balls.begin(), r.strip.balls.end(), GridBall{16, i, j}));
  }
}

TEST(Classify, DiagonalExamples) {
  auto r = build_strip(core_from_curve(diag()), 4, 10000);
  auto sides = classify_points({make_point(make_rational(1, 8), make_rational(1, 8)),
                                make_point(make_rational(3, 4), make_rational(3, 4)),
                                make_point(make_rational(1, 2), make_rational(1, 2))},
                               r.strip);
  EXPECT_EQ(sides, (std::vector<PointSide>{PointSide::Below, PointSide::Above, PointSide::Inside}));
}

TEST(Classify, AgreesWithTheLineAndRefinesMonotonically) {
  std::mt19937_64 rng(99);
  std::vector<RatPoint> points;
  for (int t = 0; t < 200; ++t) {
    long den = 1 + static_cast<long>(rng() % 97);
    points.push_back(make_point(make_rational(static_cast<long>(rng() % (den + 1)), den),
                                make_rational(static_cast<long>(rng() % (den + 1)), den)));
  }
  std::vector<std::optional<PointSide>> decided(points.size());
  for (std::int64_t n : {4, 8, 16, 32, 64}) {
    auto r = build_strip(core_from_curve(diag()), n, 10000);
    auto sides = classify_points(points, r.strip);
    for (std::size_t k = 0; k < points.size(); ++k) {
      int truth = diagonal_side(points[k]);
      if (sides[k] == PointSide::Below) EXPECT_EQ(truth, -1);
      if (sides[k] == PointSide::Above) EXPECT_EQ(truth, 1);
      if (truth == 0) EXPECT_EQ(sides[k], PointSide::Inside);
      if (decided[k]) EXPECT_EQ(sides[k], *decided[k]);
      if (sides[k] != PointSide::Inside) decided[k] = sides[k];
    }
  }
}

TEST(Admissible, Conditions) {
  EXPECT_TRUE(is_admissible({}));
  EXPECT_TRUE(is_admissible({{4, 1, 3}, {4, 2, 2}, {4, 3, 1}}));
  EXPECT_FALSE(is_admissible({{4, 1, 3}, {4, 1, 2}}));
  EXPECT_FALSE(is_admissible({{4, 1, 2}, {4, 2, 2}}));
  EXPECT_FALSE(is_admissible({{4, 1, 1}, {4, 2, 3}}));
}

TEST(TwoSided, DiagonalDomain) {
  for (std::int64_t n : {4, 16}) {
    auto r = two_sided_approx(domain_re_from_curve(diag()), domain_core_from_curve(diag()), n, 10000);
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(is_admissible(r.set.exceptional));
    std::vector<GridBall> stair;
    for (std::int64_t i = 1; i < n; ++i) stair.push_back(GridBall{n, i, n - i});
    EXPECT_EQ(sorted(r.set.exceptional), stair);
    EXPECT_EQ(r.set.upper.size() + r.set.lower.size() + r.set.exceptional.size(),
              static_cast<std::size_t>(n * n));

    CurveEstimate e = curve_estimate(r.set);
    EXPECT_EQ(e.error_bound, make_rational(1, n));
    for (std::int64_t i = 0; i < n; ++i) {
      Rational x = make_rational(i, n), f = 1 - x, f1 = 1 - make_rational(i + 1, n);
      EXPECT_LE(e.lower_values[i], f1);
      EXPECT_GE(e.upper_values[i], f);
      EXPECT_LE(e.upper_values[i] - f, e.error_bound);
      EXPECT_LE(f - e.lower_values[i], e.error_bound);
    }
    for (std::size_t k = 0; k < e.ball_estimates.size(); ++k) {
      EXPECT_EQ(diagonal_side(e.ball_estimates[k]), 0);
    }
  }
}

TEST(TwoSided, DegenerateDomains) {
  auto full = two_sided_approx(domain_re_from_curve(flat(Rational(1))), domain_core_from_curve(flat(Rational(1))), 4,
                               10000);
  EXPECT_EQ(full.set.lower.size(), 16u);
  EXPECT_TRUE(full.set.exceptional.empty());

  auto floor = two_sided_approx(domain_re_from_curve(flat(Rational(0))), domain_core_from_curve(flat(Rational(0))),
                                4, 10000);
  std::vector<GridBall> bottom;
  for (std::int64_t i = 0; i < 4; ++i) bottom.push_back(GridBall{4, i, 0});
  EXPECT_EQ(sorted(floor.unamended), bottom);
  EXPECT_TRUE(is_admissible(floor.set.exceptional));
  for (const auto& b : floor.set.exceptional) EXPECT_EQ(b.j, 0);
}

TEST(TwoSided, VarshamovGilbertSandwich) {
  BoundCurve vg = BoundCurve::vg(2);
  auto r = two_sided_approx(domain_re_from_curve(vg), domain_core_from_curve(vg), 32, 30000);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(is_admissible(r.set.exceptional));
  CurveEstimate e = curve_estimate(r.set);
  Rational slack = pow2(-20);
  for (int i = 0; i < 32; ++i) {
    RatInterval f = vg.eval(make_rational(i, 32), 40);
    EXPECT_GE(e.upper_values[i] + slack, f.hi()) << i;
    EXPECT_LE(e.lower_values[i], f.lo() + slack) << i;
    EXPECT_LE(e.upper_values[i] - f.lo(), make_rational(1, 32) + slack) << i;
    EXPECT_LE(f.hi() - e.lower_values[i], make_rational(1, 32) + slack) << i;
  }
}

TEST(TwoSided, RejectsNonMonotoneDomains) {
  // An increasing boundary violates the staircase shape of the undecided set.
  // U = {R <= delta}: a closed square misses U iff its bottom lies above its
  // right edge; an open square meets U iff its bottom lies below it.
  auto misses = [](const RatBall& b, unsigned) { return b.rate_range().lo() > b.delta_range().hi(); };
  auto meets = [](const RatBall& b, unsigned) { return b.rate_range().lo() < b.delta_range().hi(); };
  REPresentation re("increasing", meets, true);
  CoREPresentation co("increasing", misses, true);
  EXPECT_THROW(two_sided_approx(re, co, 4, 10000), InternalContractError);
}

TEST(Serialize, StripJsonIsStable) {
  auto a = build_strip(core_from_curve(diag()), 4, 10000);
  auto b = build_strip(core_from_curve(diag()), 4, 10000);
  EXPECT_EQ(strip_to_json(a), strip_to_json(b));
  EXPECT_NE(strip_to_json(a).find("\"ball_count\": 10"), std::string::npos);
}
