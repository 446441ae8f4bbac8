#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "codedomain/geometry.hpp"
#include "codedomain/rational.hpp"

namespace codedomain {

using Symbol = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 256;

/// A word of length n >= 1 over the alphabet {0, ..., q-1}.
class Word {
 public:
  Word(unsigned q, std::vector<Symbol> symbols);

  unsigned q() const noexcept { return q_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  unsigned q_;
  std::vector<Symbol> symbols_;
};

/// Number of positions where a and b differ. Throws ContractViolation on a
/// length or alphabet mismatch.
unsigned hamming_distance(const Word& a, const Word& b);

/// Exact parameters of a code: alphabet q, length n, cardinality m, minimum
/// distance d. Invariants: 1 <= m <= q^n, 0 <= d <= n, d == 0 iff m == 1.
struct CodeParams {
  unsigned q = 2;
  unsigned n = 1;
  BigInt m = 1;
  unsigned d = 0;

  CodeParams() = default;
  CodeParams(unsigned q, unsigned n, BigInt m, unsigned d);

  friend bool operator==(const CodeParams& a, const CodeParams& b) {
    return a.q == b.q && a.n == b.n && a.m == b.m && a.d == b.d;
  }
};

/// Lexicographic order on (q, n, m, d), for use as a map key.
bool operator<(const CodeParams& a, const CodeParams& b);

std::string to_string(const CodeParams& p);

/// Code point under the floor convention: (floor(log_q m) / n, d / n).
struct CodePoint {
  Rational r;
  Rational delta;

  RatPoint as_point() const { return RatPoint{r, delta}; }
  friend bool operator==(const CodePoint& a, const CodePoint& b) {
    return a.r == b.r && a.delta == b.delta;
  }
};

/// An unstructured code: a nonempty set of distinct words of one length.
/// Words are stored sorted lexicographically in a packed symbol buffer; for
/// q = 2 a bit-packed copy backs the distance kernel.
class Code {
 public:
  /// Throws ContractViolation on empty input, mixed lengths or alphabets,
  /// symbols >= q, or duplicate words.
  static Code from_words(unsigned q, std::vector<Word> words);
  /// Same, from rows of raw symbols.
  static Code from_rows(unsigned q, const std::vector<std::vector<Symbol>>& rows);

  unsigned q() const noexcept { return q_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  std::span<const Symbol> row(std::size_t index) const {
    return {symbols_.data() + index * n_, n_};
  }
  Word word(std::size_t index) const;
  std::vector<Word> words() const;

  /// Hamming distance between the words at two indices.
  unsigned distance(std::size_t a, std::size_t b) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.symbols_ == b.symbols_;
  }

 private:
  Code(unsigned q, std::size_t n, std::vector<Symbol> sorted_symbols);

  unsigned q_ = 2;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t limbs_ = 0;
  std::vector<Symbol> symbols_;
  std::vector<std::uint64_t> packed_;
};

struct DistanceWitness {
  std::size_t first = 0;
  std::size_t second = 0;
};

struct MinDistance {
  unsigned d = 0;
  /// One attaining pair (indices into the code); empty for singletons.
  std::optional<DistanceWitness> witness;
};

/// Exact minimum pairwise distance; 0 with no witness for a singleton.
MinDistance min_distance(const Code& c);

CodeParams params(const Code& c);

/// Largest t with q^t <= m, by exact integer comparison.
unsigned floor_log_q(const BigInt& m, unsigned q);

CodePoint code_point(const CodeParams& p);

/// Enclosure of log_q(m) / n of width <= 2^-precision; a single point when m
/// is a power of q.
RatInterval rate_real(const CodeParams& p, long precision_bits);

/// A triple of the ambient decidable set numbered by encode_triple: n >= 1 and
/// either (m = 1, d = 0) or (2 <= m <= q^n, 1 <= d <= n).
struct ParamTriple {
  unsigned n = 1;
  BigInt m = 1;
  unsigned d = 0;

  friend bool operator==(const ParamTriple& a, const ParamTriple& b) {
    return a.n == b.n && a.m == b.m && a.d == b.d;
  }
};

bool is_well_formed(const ParamTriple& t, unsigned q);

/// Admissible numbering of well-formed triples. Triples are ordered by n;
/// within one length the singleton triple (n, 1, 0) comes first, then
/// (n, m, d) for m = 2..q^n (outer) and d = 1..n (inner). Throws
/// ContractViolation on malformed input.
BigInt encode_triple(const ParamTriple& t, unsigned q);
ParamTriple decode_triple(const BigInt& index, unsigned q);

}  // namespace codedomain
