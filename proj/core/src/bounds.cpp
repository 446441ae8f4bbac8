#include "codedomain/bounds.hpp"

#include "codedomain/errors.hpp"
#include "codedomain/log_enclosure.hpp"

namespace codedomain {

namespace {

void check_q(unsigned q) {
  if (q < 2) throw ContractViolation("alphabet size must be at least 2");
}

Rational zero_point(unsigned q) { return 1 - make_rational(1, q); }

RatInterval clamp(const RatInterval& x, const Rational& lo, const Rational& hi) {
  Rational a = max_of(lo, min_of(hi, x.lo()));
  Rational b = max_of(lo, min_of(hi, x.hi()));
  return RatInterval(a, b);
}

// -x log_q x for 0 <= x <= 1, with the limit 0 at x = 0.
RatInterval neg_x_log(const Rational& x, unsigned q, long bits) {
  if (x == 0 || x == 1) return RatInterval::point(Rational(0));
  return -(x * log_q_enclosure(x, q, bits));
}

RatInterval one_minus(const RatInterval& x) { return RatInterval(1 - x.hi(), 1 - x.lo()); }

}  // namespace

RatInterval entropy(unsigned q, const Rational& delta, long precision) {
  check_q(q);
  if (delta < 0 || delta > 1) throw ContractViolation("entropy: delta must lie in [0, 1]");
  if (precision < 1) precision = 1;
  if (delta == 0) return RatInterval::point(Rational(0));
  if (delta == zero_point(q)) return RatInterval::point(Rational(1));
  const long bits = precision + 3;
  RatInterval sum = neg_x_log(delta, q, bits) + neg_x_log(Rational(1 - delta), q, bits);
  if (q > 2) sum = sum + delta * log_q_enclosure(Rational(q - 1), q, bits);
  if (sum.is_point()) return sum;
  RatInterval out = round_outward(sum, precision + 2);
  return RatInterval(max_of(Rational(0), out.lo()), max_of(Rational(0), out.hi()));
}

RatInterval vg_curve(unsigned q, const Rational& delta, long precision) {
  check_q(q);
  if (delta < 0 || delta > zero_point(q)) {
    throw ContractViolation("vg_curve: delta must lie in [0, 1 - 1/q]");
  }
  RatInterval h = entropy(q, delta, precision + 1);
  return clamp(make_rational(1, 2) * one_minus(h), Rational(0), make_rational(1, 2));
}

RatInterval vg_root(unsigned q, const Rational& r, long precision) {
  check_q(q);
  if (r < 0 || r > make_rational(1, 2)) throw ContractViolation("vg_root: r must lie in [0, 1/2]");
  if (r == 0) return RatInterval::point(zero_point(q));
  if (r == make_rational(1, 2)) return RatInterval::point(Rational(0));
  // The curve is strictly decreasing: keep vg(lo) >= r >= vg(hi).
  Rational lo = 0;
  Rational hi = zero_point(q);
  const Rational target = pow2(-precision);
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    for (long bits = precision + 8;; bits *= 2) {
      RatInterval v = vg_curve(q, mid, bits);
      if (v.lo() > r) {
        lo = mid;
        break;
      }
      if (v.hi() < r) {
        hi = mid;
        break;
      }
      if (v.is_point()) return RatInterval::point(mid);
      if (bits > 4096) {
        // r is numerically indistinguishable from vg(mid): mid is a root
        // within the requested width.
        return RatInterval(mid - target / 2, mid + target / 2);
      }
    }
  }
  return RatInterval(lo, hi);
}

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::VG:
      return "vg";
    case CurveKind::GVLower:
      return "gv";
    case CurveKind::Singleton:
      return "singleton";
    case CurveKind::Hamming:
      return "hamming";
    case CurveKind::PlotkinZero:
      return "plotkin";
    case CurveKind::SyntheticPolyline:
      return "polyline";
  }
  return "unknown";
}

BoundCurve BoundCurve::vg(unsigned q) {
  check_q(q);
  return BoundCurve(CurveKind::VG, q);
}

BoundCurve BoundCurve::gv_lower(unsigned q) {
  check_q(q);
  return BoundCurve(CurveKind::GVLower, q);
}

BoundCurve BoundCurve::singleton(unsigned q) {
  check_q(q);
  return BoundCurve(CurveKind::Singleton, q);
}

BoundCurve BoundCurve::hamming(unsigned q) {
  check_q(q);
  return BoundCurve(CurveKind::Hamming, q);
}

BoundCurve BoundCurve::plotkin_zero(unsigned q) {
  check_q(q);
  return BoundCurve(CurveKind::PlotkinZero, q);
}

BoundCurve BoundCurve::polyline(Polyline vertices) {
  if (vertices.size() < 2) throw ContractViolation("polyline curve needs at least two vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (v.r < 0 || v.r > 1 || v.delta < 0 || v.delta > 1) {
      throw ContractViolation("polyline vertices must lie in the unit square");
    }
    if (i > 0 && !(vertices[i - 1].delta < v.delta && vertices[i - 1].r >= v.r)) {
      throw ContractViolation("polyline must have increasing delta and non-increasing R");
    }
  }
  BoundCurve c(CurveKind::SyntheticPolyline, 2);
  c.vertices_ = std::move(vertices);
  return c;
}

std::string BoundCurve::name() const {
  if (kind_ == CurveKind::SyntheticPolyline) return "polyline";
  return std::string(to_string(kind_)) + ":" + std::to_string(q_);
}

bool BoundCurve::exact() const noexcept {
  return kind_ == CurveKind::Singleton || kind_ == CurveKind::PlotkinZero ||
         kind_ == CurveKind::SyntheticPolyline;
}

RatInterval BoundCurve::eval(const Rational& delta, long precision) const {
  if (delta < 0 || delta > 1) throw ContractViolation("curve argument must lie in [0, 1]");
  switch (kind_) {
    case CurveKind::VG:
      if (delta >= zero_point(q_)) return RatInterval::point(Rational(0));
      return vg_curve(q_, delta, precision);
    case CurveKind::GVLower:
      if (delta >= zero_point(q_)) return RatInterval::point(Rational(0));
      return clamp(one_minus(entropy(q_, delta, precision)), Rational(0), Rational(1));
    case CurveKind::Singleton:
      return RatInterval::point(delta < zero_point(q_) ? Rational(1 - delta) : Rational(0));
    case CurveKind::Hamming:
      return clamp(one_minus(entropy(q_, Rational(delta / 2), precision)), Rational(0), Rational(1));
    case CurveKind::PlotkinZero: {
      Rational v = 1 - delta * q_ / (q_ - 1);
      return RatInterval::point(max_of(Rational(0), v));
    }
    case CurveKind::SyntheticPolyline: {
      if (delta <= vertices_.front().delta) return RatInterval::point(vertices_.front().r);
      if (delta >= vertices_.back().delta) return RatInterval::point(vertices_.back().r);
      for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        if (delta <= b.delta) {
          Rational t = (delta - a.delta) / (b.delta - a.delta);
          return RatInterval::point(a.r + t * (b.r - a.r));
        }
      }
      return RatInterval::point(vertices_.back().r);
    }
  }
  throw ContractViolation("unknown curve kind");
}

BracketPair bracket_curves(unsigned q) {
  return BracketPair{BoundCurve::gv_lower(q), BoundCurve::singleton(q)};
}

BoundCurve synthetic_polyline(Polyline vertices) { return BoundCurve::polyline(std::move(vertices)); }

}  // namespace codedomain
