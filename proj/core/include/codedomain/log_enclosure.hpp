#pragma once

#include "codedomain/rational.hpp"

namespace codedomain {

/// Certified enclosure of ln(x) for rational x > 0, of width at most
/// 2^-precision_bits. Endpoints are dyadic rationals. ln(1) is exactly [0, 0].
RatInterval ln_enclosure(const Rational& x, long precision_bits);

/// Certified enclosure of log_q(x) = ln(x) / ln(q) for q >= 2, width at most
/// 2^-precision_bits. Exact when x is an integral power of q.
RatInterval log_q_enclosure(const Rational& x, unsigned q, long precision_bits);

}  // namespace codedomain
