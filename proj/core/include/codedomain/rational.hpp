#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace codedomain {

using BigInt = mpz_class;
/// GMP rationals are kept canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Accepts "p/q", "p", and an optional leading sign.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

double to_double(const Rational& x);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);
Rational abs_of(const Rational& x);
const Rational& min_of(const Rational& a, const Rational& b);
const Rational& max_of(const Rational& a, const Rational& b);

BigInt pow_of(unsigned base, unsigned long exponent);
/// 2^e as an exact rational (e may be negative).
Rational pow2(long e);

/// Closed interval [lo, hi] with exact rational endpoints.
class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(Rational lo, Rational hi);

  static RatInterval point(const Rational& x) { return RatInterval(x, x); }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const;
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  RatInterval operator-() const { return RatInterval(-hi_, -lo_); }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rational& s, const RatInterval& a);
/// Requires 0 not in b.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

/// Widens the endpoints outward to multiples of 2^-bits.
RatInterval round_outward(const RatInterval& a, long bits);

}  // namespace codedomain
