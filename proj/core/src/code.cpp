#include "codedomain/code.hpp"

#include <algorithm>
#include <bit>

#include "codedomain/errors.hpp"
#include "codedomain/log_enclosure.hpp"

namespace codedomain {

namespace {

void check_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) throw ContractViolation("alphabet size must be in [2, 256]");
}

}  // namespace

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q);
  if (symbols_.empty()) throw ContractViolation("words must have length >= 1");
  for (Symbol s : symbols_) {
    if (s >= q) throw ContractViolation("symbol out of alphabet range");
  }
}

unsigned hamming_distance(const Word& a, const Word& b) {
  if (a.q() != b.q()) throw ContractViolation("hamming distance: alphabet mismatch");
  if (a.length() != b.length()) throw ContractViolation("hamming distance: length mismatch");
  unsigned d = 0;
  for (std::size_t i = 0; i < a.length(); ++i) d += a[i] != b[i];
  return d;
}

CodeParams::CodeParams(unsigned q_, unsigned n_, BigInt m_, unsigned d_)
    : q(q_), n(n_), m(std::move(m_)), d(d_) {
  check_alphabet(q);
  if (n < 1) throw ContractViolation("code length must be >= 1");
  if (m < 1 || m > pow_of(q, n)) throw ContractViolation("cardinality must satisfy 1 <= m <= q^n");
  if (d > n) throw ContractViolation("minimum distance exceeds length");
  if ((d == 0) != (m == 1)) throw ContractViolation("d == 0 exactly for singleton codes");
}

bool operator<(const CodeParams& a, const CodeParams& b) {
  if (a.q != b.q) return a.q < b.q;
  if (a.n != b.n) return a.n < b.n;
  if (a.m != b.m) return a.m < b.m;
  return a.d < b.d;
}

std::string to_string(const CodeParams& p) {
  return "[" + std::to_string(p.n) + ", " + p.m.get_str() + ", " + std::to_string(p.d) + "]_" +
         std::to_string(p.q);
}

Code::Code(unsigned q, std::size_t n, std::vector<Symbol> sorted_symbols)
    : q_(q), n_(n), m_(sorted_symbols.size() / n), symbols_(std::move(sorted_symbols)) {
  if (q_ == 2) {
    limbs_ = (n_ + 63) / 64;
    packed_.assign(m_ * limbs_, 0);
    for (std::size_t w = 0; w < m_; ++w) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (symbols_[w * n_ + i]) packed_[w * limbs_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

Code Code::from_rows(unsigned q, const std::vector<std::vector<Symbol>>& rows) {
  check_alphabet(q);
  if (rows.empty()) throw ContractViolation("a code must be nonempty");
  const std::size_t n = rows.front().size();
  if (n == 0) throw ContractViolation("words must have length >= 1");
  std::vector<const std::vector<Symbol>*> order;
  order.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != n) throw ContractViolation("all words of a code must share one length");
    for (Symbol s : r) {
      if (s >= q) throw ContractViolation("symbol out of alphabet range");
    }
    order.push_back(&r);
  }
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (*order[k] == *order[k - 1]) throw ContractViolation("duplicate word in code");
  }
  std::vector<Symbol> flat;
  flat.reserve(rows.size() * n);
  for (auto* r : order) flat.insert(flat.end(), r->begin(), r->end());
  return Code(q, n, std::move(flat));
}

Code Code::from_words(unsigned q, std::vector<Word> words) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(words.size());
  for (const auto& w : words) {
    if (w.q() != q) throw ContractViolation("word alphabet differs from code alphabet");
    rows.emplace_back(w.symbols().begin(), w.symbols().end());
  }
  return from_rows(q, rows);
}

Word Code::word(std::size_t index) const {
  auto r = row(index);
  return Word(q_, std::vector<Symbol>(r.begin(), r.end()));
}

std::vector<Word> Code::words() const {
  std::vector<Word> out;
  out.reserve(m_);
  for (std::size_t k = 0; k < m_; ++k) out.push_back(word(k));
  return out;
}

unsigned Code::distance(std::size_t a, std::size_t b) const {
  if (q_ == 2) {
    const std::uint64_t* pa = packed_.data() + a * limbs_;
    const std::uint64_t* pb = packed_.data() + b * limbs_;
    unsigned d = 0;
    for (std::size_t l = 0; l < limbs_; ++l) d += static_cast<unsigned>(std::popcount(pa[l] ^ pb[l]));
    return d;
  }
  const Symbol* pa = symbols_.data() + a * n_;
  const Symbol* pb = symbols_.data() + b * n_;
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += pa[i] != pb[i];
  return d;
}

MinDistance min_distance(const Code& c) {
  MinDistance out;
  if (c.size() < 2) return out;
  unsigned best = static_cast<unsigned>(c.length()) + 1;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      unsigned d = c.distance(a, b);
      if (d < best) {
        best = d;
        out.witness = DistanceWitness{a, b};
        if (best == 1) {
          out.d = 1;
          return out;
        }
      }
    }
  }
  out.d = best;
  return out;
}

CodeParams params(const Code& c) {
  return CodeParams(c.q(), static_cast<unsigned>(c.length()), BigInt(static_cast<unsigned long>(c.size())),
                    min_distance(c).d);
}

unsigned floor_log_q(const BigInt& m, unsigned q) {
  if (m < 1) throw ContractViolation("floor_log_q requires m >= 1");
  if (q < 2) throw ContractViolation("floor_log_q requires q >= 2");
  unsigned t = 0;
  BigInt power = q;
  while (power <= m) {
    power *= q;
    ++t;
  }
  return t;
}

CodePoint code_point(const CodeParams& p) {
  return CodePoint{make_rational(BigInt(floor_log_q(p.m, p.q)), BigInt(p.n)),
                   make_rational(BigInt(p.d), BigInt(p.n))};
}

RatInterval rate_real(const CodeParams& p, long precision_bits) {
  // log_q(m) / n: an enclosure of log_q(m) of width 2^-(prec) divided by n >= 1
  // stays within the requested width.
  RatInterval k = log_q_enclosure(Rational(p.m), p.q, precision_bits);
  return Rational(make_rational(1, p.n)) * k;
}

bool is_well_formed(const ParamTriple& t, unsigned q) {
  if (q < 2 || t.n < 1) return false;
  if (t.m == 1) return t.d == 0;
  return t.m >= 2 && t.m <= pow_of(q, t.n) && t.d >= 1 && t.d <= t.n;
}

namespace {

// Number of well-formed triples of length n: the singleton plus
// (q^n - 1) * n non-degenerate ones.
BigInt triples_of_length(unsigned n, unsigned q) {
  return BigInt(1) + (pow_of(q, n) - 1) * n;
}

}  // namespace

BigInt encode_triple(const ParamTriple& t, unsigned q) {
  if (!is_well_formed(t, q)) throw ContractViolation("encode_triple: malformed parameter triple");
  BigInt offset = 0;
  for (unsigned l = 1; l < t.n; ++l) offset += triples_of_length(l, q);
  if (t.m == 1) return offset;
  return offset + 1 + (t.m - 2) * t.n + (t.d - 1);
}

ParamTriple decode_triple(const BigInt& index, unsigned q) {
  if (q < 2) throw ContractViolation("decode_triple: q must be >= 2");
  if (index < 0) throw ContractViolation("decode_triple: negative index");
  BigInt rest = index;
  unsigned n = 1;
  for (;; ++n) {
    BigInt count = triples_of_length(n, q);
    if (rest < count) break;
    rest -= count;
  }
  if (rest == 0) return ParamTriple{n, BigInt(1), 0};
  rest -= 1;
  BigInt m_off = rest / n;
  BigInt d_off = rest % n;
  return ParamTriple{n, m_off + 2, static_cast<unsigned>(d_off.get_ui()) + 1};
}

}  // namespace codedomain
