#include "codedomain/rational.hpp"

#include <cctype>
#include <string>

#include "codedomain/errors.hpp"

namespace codedomain {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ContractViolation("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ContractViolation("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ContractViolation("malformed integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  return make_rational(num, den);
}

double to_double(const Rational& x) { return x.get_d(); }

BigInt floor_of(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

const Rational& min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt pow_of(unsigned base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Rational pow2(long e) {
  BigInt p = pow_of(2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(BigInt(1), p) : Rational(p);
}

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw ContractViolation("interval with lo > hi");
}

Rational RatInterval::midpoint() const { return Rational((lo_ + hi_) / 2); }

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() - b.hi(), a.hi() - b.lo());
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  Rational lo = c[0], hi = c[0];
  for (const auto& v : c) {
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  }
  return RatInterval(lo, hi);
}

RatInterval operator*(const Rational& s, const RatInterval& a) {
  if (s >= 0) return RatInterval(s * a.lo(), s * a.hi());
  return RatInterval(s * a.hi(), s * a.lo());
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains(Rational(0))) throw ContractViolation("interval division by an interval containing 0");
  RatInterval inv(Rational(1 / b.hi()), Rational(1 / b.lo()));
  return a * inv;
}

RatInterval round_outward(const RatInterval& a, long bits) {
  Rational scale = pow2(bits);
  Rational lo_scaled = a.lo() * scale;
  Rational hi_scaled = a.hi() * scale;
  return RatInterval(Rational(floor_of(lo_scaled)) / scale, Rational(ceil_of(hi_scaled)) / scale);
}

}  // namespace codedomain
