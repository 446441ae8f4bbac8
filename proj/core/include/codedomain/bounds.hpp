#pragma once

#include <string>
#include <vector>

#include "codedomain/geometry.hpp"
#include "codedomain/rational.hpp"

namespace codedomain {

/// q-ary entropy H_q(delta) = delta log_q(q-1) - delta log_q delta
/// - (1-delta) log_q(1-delta), enclosed to width <= 2^-precision. Exact at
/// delta = 0, at delta = 1 - 1/q (value 1) and at delta = 1 for q = 2.
RatInterval entropy(unsigned q, const Rational& delta, long precision);

/// Varshamov-Gilbert curve R = (1 - H_q(delta)) / 2 on [0, 1 - 1/q]; exactly
/// 1/2 at delta = 0 and 0 at delta = 1 - 1/q. Throws ContractViolation outside
/// the domain.
RatInterval vg_curve(unsigned q, const Rational& delta, long precision);

/// Enclosure of the delta in [0, 1 - 1/q] with vg_curve(q, delta) = r, for
/// 0 <= r <= 1/2, by certified bisection. Width <= 2^-precision.
RatInterval vg_root(unsigned q, const Rational& r, long precision);

enum class CurveKind { VG, GVLower, Singleton, Hamming, PlotkinZero, SyntheticPolyline };

const char* to_string(CurveKind kind);

/// A non-increasing curve delta -> R on [0, 1] with two-sided evaluation.
/// Transcendental kinds are extended by 0 past their zero point 1 - 1/q.
class BoundCurve {
 public:
  static BoundCurve vg(unsigned q);
  /// 1 - H_q(delta), the Gilbert-Varshamov lower bound.
  static BoundCurve gv_lower(unsigned q);
  /// 1 - delta below 1 - 1/q and 0 from there on; discontinuous at 1 - 1/q.
  static BoundCurve singleton(unsigned q);
  /// Sphere-packing bound 1 - H_q(delta/2).
  static BoundCurve hamming(unsigned q);
  /// max(0, 1 - q delta / (q-1)).
  static BoundCurve plotkin_zero(unsigned q);
  /// Piecewise-linear curve through the vertices, constant beyond the first
  /// and last vertex. Needs at least two vertices inside the unit square with
  /// delta strictly increasing and R non-increasing; throws ContractViolation
  /// otherwise.
  static BoundCurve polyline(Polyline vertices);

  CurveKind kind() const noexcept { return kind_; }
  unsigned q() const noexcept { return q_; }
  std::string name() const;

  /// Enclosure of the curve at delta in [0, 1], width <= 2^-precision; a
  /// single point for exact kinds. Throws ContractViolation outside [0, 1].
  RatInterval eval(const Rational& delta, long precision) const;

  /// Values are exact rationals at rational arguments.
  bool exact() const noexcept;
  bool continuous() const noexcept { return kind_ != CurveKind::Singleton; }
  /// The polyline vertices (empty for other kinds).
  const Polyline& vertices() const noexcept { return vertices_; }

 private:
  BoundCurve(CurveKind kind, unsigned q) : kind_(kind), q_(q) {}

  CurveKind kind_;
  unsigned q_;
  Polyline vertices_;
};

struct BracketPair {
  BoundCurve lower;
  BoundCurve upper;
};

/// lower = Gilbert-Varshamov 1 - H_q, upper = Singleton with the zero region
/// [1 - 1/q, 1].
BracketPair bracket_curves(unsigned q);

BoundCurve synthetic_polyline(Polyline vertices);

}  // namespace codedomain
