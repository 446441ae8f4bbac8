#include "codedomain/log_enclosure.hpp"

#include "codedomain/errors.hpp"

namespace codedomain {

namespace {

long bit_length(const BigInt& v) {
  return v == 0 ? 0 : static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

// atanh(z) for 0 <= z <= 1/5 via  z + z^3/3 + z^5/5 + ...
// Partial sums bound the value from below; the remainder after K terms is at
// most z^(2K+1) / ((2K+1)(1 - z^2)).
RatInterval atanh_nonnegative(const Rational& z, long bits) {
  if (z == 0) return RatInterval::point(Rational(0));
  const Rational z2 = z * z;
  const Rational tail_factor = 1 / (1 - z2);
  const Rational target = pow2(-(bits + 2));

  Rational sum = 0;
  Rational power = z;  // z^(2i+1)
  for (long i = 0;; ++i) {
    sum += power / (2 * i + 1);
    power *= z2;
    Rational tail = power * tail_factor / (2 * i + 3);
    if (tail <= target) {
      return round_outward(RatInterval(sum, Rational(sum + tail)), bits + 2);
    }
  }
}

RatInterval atanh_enclosure(const Rational& z, long bits) {
  if (z < 0) return -atanh_nonnegative(Rational(-z), bits);
  return atanh_nonnegative(z, bits);
}

RatInterval ln2_enclosure(long bits) {
  return Rational(2) * atanh_enclosure(make_rational(1, 3), bits + 1);
}

}  // namespace

RatInterval ln_enclosure(const Rational& x, long precision_bits) {
  if (x <= 0) throw ContractViolation("logarithm of a non-positive number");
  if (precision_bits < 1) precision_bits = 1;
  if (x == 1) return RatInterval::point(Rational(0));

  // x = 2^e * y with y in [3/4, 3/2), then ln y = 2 atanh((y-1)/(y+1)) with
  // |(y-1)/(y+1)| <= 1/7.
  long e = bit_length(x.get_num()) - bit_length(x.get_den());
  Rational y = x * pow2(-e);
  const Rational upper = make_rational(3, 2);
  const Rational lower = make_rational(3, 4);
  while (y >= upper) {
    y /= 2;
    ++e;
  }
  while (y < lower) {
    y *= 2;
    --e;
  }
  Rational z = (y - 1) / (y + 1);

  long abs_e = e < 0 ? -e : e;
  long guard = bit_length(BigInt(abs_e)) + 4;
  long work = precision_bits + guard;
  RatInterval result = Rational(2) * atanh_enclosure(z, work);
  if (e != 0) result = result + Rational(e) * ln2_enclosure(work);
  RatInterval rounded = round_outward(result, precision_bits + 2);
  if (rounded.width() > pow2(-precision_bits)) {
    throw InternalContractError("ln enclosure wider than requested precision");
  }
  return rounded;
}

RatInterval log_q_enclosure(const Rational& x, unsigned q, long precision_bits) {
  if (q < 2) throw ContractViolation("log base must be >= 2");
  if (x <= 0) throw ContractViolation("logarithm of a non-positive number");
  if (precision_bits < 1) precision_bits = 1;

  // Exact for integral powers of q (positive or negative exponent).
  {
    const BigInt qq(q);
    auto exact_log = [&](const BigInt& v) -> long {
      if (v < 1) return -1;
      BigInt cur = v;
      long t = 0;
      while (cur % qq == 0) {
        cur /= qq;
        ++t;
      }
      return cur == 1 ? t : -1;
    };
    if (x.get_den() == 1) {
      long t = exact_log(x.get_num());
      if (t >= 0) return RatInterval::point(Rational(t));
    } else if (x.get_num() == 1) {
      long t = exact_log(x.get_den());
      if (t >= 0) return RatInterval::point(Rational(-t));
    }
  }

  for (long work = precision_bits + 4;; work += 16) {
    RatInterval num = ln_enclosure(x, work);
    RatInterval den = ln_enclosure(Rational(q), work + bit_length(BigInt(floor_of(abs_of(num.hi()) + 1))) + 2);
    RatInterval quotient = round_outward(num / den, precision_bits + 2);
    if (quotient.width() <= pow2(-precision_bits)) return quotient;
  }
}

}  // namespace codedomain
