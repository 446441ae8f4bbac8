#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codedomain/code.hpp"
#include "codedomain/finite_field.hpp"

namespace codedomain {

/// Default cap on q^k for exhaustive codeword enumeration.
inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 24;

/// A full-rank k x n matrix over GF(q).
class GeneratorMatrix {
 public:
  /// Throws ContractViolation if the shape is empty, an entry is out of range,
  /// or the rows are linearly dependent.
  GeneratorMatrix(std::shared_ptr<const FiniteField> field, std::size_t k, std::size_t n,
                  std::vector<FieldElement> entries);

  const FiniteField& field() const noexcept { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return k_; }
  std::size_t cols() const noexcept { return n_; }
  FieldElement at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const { return {entries_.data() + r * n_, n_}; }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.field_->order() == b.field_->order() && a.k_ == b.k_ && a.n_ == b.n_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const FiniteField> field_;
  std::size_t k_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

/// Rank of a k x n matrix over the field (Gaussian elimination).
std::size_t matrix_rank(const FiniteField& field, std::size_t k, std::size_t n,
                        std::vector<FieldElement> entries);

struct MinWeightWord {
  unsigned weight = 0;
  std::vector<FieldElement> codeword;
};

/// A linear [n, k]_q code given by its generator matrix. The minimum distance
/// is computed on first request by full enumeration and cached; copies share
/// the cache.
class LinearCode {
 public:
  explicit LinearCode(GeneratorMatrix gen);

  const GeneratorMatrix& generator() const noexcept { return gen_; }
  const FiniteField& field() const noexcept { return gen_.field(); }
  unsigned q() const noexcept { return gen_.field().order(); }
  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  BigInt cardinality() const { return pow_of(q(), dimension()); }

  /// Exact minimum nonzero weight. Throws BudgetExceeded when q^k exceeds cap.
  unsigned min_weight(std::uint64_t cap = kDefaultCodewordCap) const;
  /// A nonzero codeword of minimum weight (lexicographically first in message
  /// enumeration order).
  MinWeightWord min_weight_word(std::uint64_t cap = kDefaultCodewordCap) const;

  CodeParams params(std::uint64_t cap = kDefaultCodewordCap) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<MinWeightWord> value;
  };

  GeneratorMatrix gen_;
  std::shared_ptr<Cache> cache_;
};

/// Calls fn(codeword) for every codeword, the zero word first, in odometer
/// order over messages (last message coordinate fastest, field elements in
/// symbol order). Throws BudgetExceeded when q^k exceeds cap.
void for_each_codeword(const GeneratorMatrix& gen, const std::function<void(std::span<const FieldElement>)>& fn,
                       std::uint64_t cap = kDefaultCodewordCap);

/// Explicit word set of the code. Throws BudgetExceeded when q^k exceeds cap.
Code to_code(const LinearCode& c, std::uint64_t cap = kDefaultCodewordCap);

/// Built-in seed codes:
///   "repetition" (length `index`, any prime-power q): [n, 1, n]
///   "parity" (length `index`): even-weight / zero-sum code [n, n-1, 2]
///   "hamming_7_4" (q = 2): [7, 4, 3]
///   "extended_hamming_8_4" (q = 2): [8, 4, 4]
///   "product(A,B)": tensor product of two named seeds, parameters
///   [n1 n2, k1 k2, d1 d2]; a seed inside product() carries its own length as
///   "repetition:5" or "parity:4".
/// Throws ContractViolation for unknown names or invalid sizes.
LinearCode seed_family(std::string_view name, unsigned index = 0, unsigned q = 2);

/// Text format: "q n k" then k rows of n field elements (decimal symbol
/// representation).
void write_generator(std::ostream& out, const GeneratorMatrix& gen);
GeneratorMatrix read_generator(std::istream& in);

}  // namespace codedomain
