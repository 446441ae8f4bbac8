#include "codedomain/finite_field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "codedomain/errors.hpp"

namespace codedomain {

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 0;
  for (unsigned f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? std::pair{p, e} : std::pair{0u, 0u};
}

namespace {

// Digits of an element, lowest-degree coefficient first.
std::vector<unsigned> digits(unsigned v, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) v = v * p + d[i];
  return v;
}

// Multiplies the element v by x modulo the monic polynomial with low
// coefficients `low` (the x^e coefficient is 1).
unsigned times_x(unsigned v, const std::vector<unsigned>& low, unsigned p, unsigned e) {
  std::vector<unsigned> d = digits(v, p, e);
  unsigned top = d[e - 1];
  for (unsigned i = e - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  // x^e = -sum low_i x^i
  for (unsigned i = 0; i < e; ++i) d[i] = (d[i] + (p - low[i]) * top) % p;
  return from_digits(d, p);
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  auto [p, e] = prime_power_decomposition(q);
  if (p == 0 || q > 256) throw ContractViolation("field order must be a prime power in [2, 256], got " + std::to_string(q));
  p_ = p;
  e_ = e;

  add_.resize(q * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    std::vector<unsigned> dn(e);
    for (unsigned i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<FieldElement>(from_digits(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<unsigned> ds(e);
      for (unsigned i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<FieldElement>(from_digits(ds, p));
    }
  }

  // Find the generator: smallest primitive root (e = 1) or x modulo the
  // smallest primitive polynomial (e > 1). An element of multiplicative order
  // q - 1 makes every nonzero residue a power of it, so the quotient ring is a
  // field and the modulus is irreducible.
  const unsigned units = q - 1;
  exp_.assign(2 * units, 0);
  log_.assign(q, 0);
  auto try_fill = [&](auto step) {
    std::vector<bool> seen(q, false);
    unsigned v = 1;
    for (unsigned k = 0; k < units; ++k) {
      if (seen[v] || v == 0) return false;
      seen[v] = true;
      exp_[k] = static_cast<FieldElement>(v);
      log_[v] = k;
      v = step(v);
    }
    return v == 1;
  };

  bool found = false;
  if (e == 1) {
    for (unsigned g = 1; g < p && !found; ++g) {
      found = try_fill([&](unsigned v) { return (v * g) % p; });
    }
  } else {
    unsigned candidates = 1;
    for (unsigned i = 0; i < e; ++i) candidates *= p;
    for (unsigned c = 1; c < candidates && !found; ++c) {
      std::vector<unsigned> low = digits(c, p, e);
      if (low[0] == 0) continue;  // divisible by x
      found = try_fill([&](unsigned v) { return times_x(v, low, p, e); });
      if (found) {
        modulus_ = low;
        modulus_.push_back(1);
      }
    }
  }
  if (!found) throw InternalContractError("no primitive element found for GF(" + std::to_string(q) + ")");
  for (unsigned k = 0; k < units; ++k) exp_[k + units] = exp_[k];
}

std::shared_ptr<const FiniteField> FiniteField::of(unsigned q) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const FiniteField>(q);
  cache.emplace(q, field);
  return field;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a == 0) throw ContractViolation("inverse of zero");
  const unsigned units = q_ - 1;
  return exp_[(units - log_[a]) % units];
}

}  // namespace codedomain
