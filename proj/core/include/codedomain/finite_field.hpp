#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace codedomain {

using FieldElement = std::uint8_t;

/// GF(p^e) with q = p^e <= 256. Elements use the symbol representation: the
/// integer sum c_i p^i encodes the polynomial sum c_i x^i. For e > 1 the
/// modulus is the smallest primitive monic polynomial of degree e (coefficients
/// compared as the integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}); for e = 1
/// multiplication is ordinary arithmetic mod p and the generator is the
/// smallest primitive root.
class FiniteField {
 public:
  /// Throws ContractViolation unless q is a prime power in [2, 256].
  explicit FiniteField(unsigned q);

  /// Shared instance per order.
  static std::shared_ptr<const FiniteField> of(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  /// Monic modulus coefficients, lowest degree first (size e + 1); empty for
  /// prime fields.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  /// The generator of the multiplicative group used by the tables.
  FieldElement generator() const noexcept { return exp_[1]; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws ContractViolation for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

 private:
  unsigned q_;
  unsigned p_;
  unsigned e_;
  std::vector<unsigned> modulus_;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> neg_;
  std::vector<FieldElement> exp_;  // size 2(q-1), so exp_[log a + log b] needs no reduction
  std::vector<unsigned> log_;
};

/// Returns (p, e) with q = p^e, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);

}  // namespace codedomain
