#include "codedomain/linear_code.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "codedomain/errors.hpp"

namespace codedomain {

std::size_t matrix_rank(const FiniteField& f, std::size_t k, std::size_t n, std::vector<FieldElement> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < k; ++col) {
    std::size_t pivot = rank;
    while (pivot < k && a[pivot * n + col] == 0) ++pivot;
    if (pivot == k) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[rank * n + c]);
    }
    FieldElement inv = f.inv(a[rank * n + col]);
    for (std::size_t c = 0; c < n; ++c) a[rank * n + c] = f.mul(a[rank * n + c], inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || a[r * n + col] == 0) continue;
      FieldElement factor = a[r * n + col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[rank * n + c]));
      }
    }
    ++rank;
  }
  return rank;
}

GeneratorMatrix::GeneratorMatrix(std::shared_ptr<const FiniteField> field, std::size_t k, std::size_t n,
                                 std::vector<FieldElement> entries)
    : field_(std::move(field)), k_(k), n_(n), entries_(std::move(entries)) {
  if (!field_) throw ContractViolation("generator matrix needs a field");
  if (k_ == 0 || n_ == 0) throw ContractViolation("generator matrix must have k >= 1 and n >= 1");
  if (entries_.size() != k_ * n_) throw ContractViolation("generator matrix entry count differs from k*n");
  for (FieldElement e : entries_) {
    if (e >= field_->order()) throw ContractViolation("generator entry outside the field");
  }
  if (matrix_rank(*field_, k_, n_, entries_) != k_) {
    throw ContractViolation("generator matrix is not full rank");
  }
}

namespace {

void check_cap(const GeneratorMatrix& gen, std::uint64_t cap) {
  BigInt size = pow_of(gen.field().order(), gen.rows());
  if (size > BigInt(static_cast<unsigned long>(cap))) {
    throw BudgetExceeded("codeword enumeration of q^k = " + size.get_str() + " words exceeds cap " +
                         std::to_string(cap));
  }
}

// Visits all codewords in odometer order; stops early when fn returns false.
template <typename Fn>
void enumerate_codewords(const GeneratorMatrix& gen, Fn&& fn) {
  const FiniteField& f = gen.field();
  const std::size_t k = gen.rows();
  const std::size_t n = gen.cols();
  const unsigned q = f.order();
  std::vector<FieldElement> message(k, 0);
  std::vector<FieldElement> cw(n, 0);
  if (!fn(std::span<const FieldElement>(cw))) return;
  for (;;) {
    std::size_t r = k;
    // Advance the odometer: digits wrap from q-1 back to 0.
    while (r > 0) {
      --r;
      FieldElement old = message[r];
      FieldElement next = static_cast<FieldElement>((old + 1u) % q);
      message[r] = next;
      FieldElement delta = f.sub(next, old);
      auto row = gen.row(r);
      for (std::size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], f.mul(delta, row[c]));
      if (next != 0) break;
      if (r == 0) return;
    }
    if (!fn(std::span<const FieldElement>(cw))) return;
  }
}

}  // namespace

void for_each_codeword(const GeneratorMatrix& gen, const std::function<void(std::span<const FieldElement>)>& fn,
                       std::uint64_t cap) {
  check_cap(gen, cap);
  enumerate_codewords(gen, [&](std::span<const FieldElement> cw) {
    fn(cw);
    return true;
  });
}

LinearCode::LinearCode(GeneratorMatrix gen) : gen_(std::move(gen)), cache_(std::make_shared<Cache>()) {}

MinWeightWord LinearCode::min_weight_word(std::uint64_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->value) return *cache_->value;
  check_cap(gen_, cap);
  MinWeightWord best;
  best.weight = static_cast<unsigned>(length()) + 1;
  enumerate_codewords(gen_, [&](std::span<const FieldElement> cw) {
    unsigned w = 0;
    for (FieldElement s : cw) w += s != 0;
    if (w != 0 && w < best.weight) {
      best.weight = w;
      best.codeword.assign(cw.begin(), cw.end());
    }
    return best.weight > 1;
  });
  cache_->value = best;
  return best;
}

unsigned LinearCode::min_weight(std::uint64_t cap) const { return min_weight_word(cap).weight; }

CodeParams LinearCode::params(std::uint64_t cap) const {
  return CodeParams(q(), static_cast<unsigned>(length()), cardinality(), min_weight(cap));
}

Code to_code(const LinearCode& c, std::uint64_t cap) {
  std::vector<std::vector<Symbol>> rows;
  for_each_codeword(
      c.generator(), [&](std::span<const FieldElement> cw) { rows.emplace_back(cw.begin(), cw.end()); }, cap);
  return Code::from_rows(c.q(), rows);
}

namespace {

LinearCode from_rows(unsigned q, const std::vector<std::vector<unsigned>>& rows) {
  std::vector<FieldElement> entries;
  for (const auto& r : rows) {
    for (unsigned v : r) entries.push_back(static_cast<FieldElement>(v));
  }
  return LinearCode(GeneratorMatrix(FiniteField::of(q), rows.size(), rows.front().size(), std::move(entries)));
}

LinearCode kronecker(const LinearCode& a, const LinearCode& b) {
  if (a.q() != b.q()) throw ContractViolation("product code factors must share the field");
  const FiniteField& f = a.field();
  const auto& ga = a.generator();
  const auto& gb = b.generator();
  std::size_t k = ga.rows() * gb.rows();
  std::size_t n = ga.cols() * gb.cols();
  std::vector<FieldElement> entries(k * n);
  for (std::size_t ra = 0; ra < ga.rows(); ++ra)
    for (std::size_t rb = 0; rb < gb.rows(); ++rb)
      for (std::size_t ca = 0; ca < ga.cols(); ++ca)
        for (std::size_t cb = 0; cb < gb.cols(); ++cb)
          entries[(ra * gb.rows() + rb) * n + ca * gb.cols() + cb] = f.mul(ga.at(ra, ca), gb.at(rb, cb));
  return LinearCode(GeneratorMatrix(a.generator().field_ptr(), k, n, std::move(entries)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

LinearCode seed_family(std::string_view name, unsigned index, unsigned q) {
  name = trim(name);
  if (name.starts_with("product(") && name.ends_with(")")) {
    std::string_view inner = name.substr(8, name.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return kronecker(seed_family(inner.substr(0, i), 0, q), seed_family(inner.substr(i + 1), 0, q));
      }
    }
    throw ContractViolation("product seed needs two comma-separated factors");
  }
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    std::string size(name.substr(colon + 1));
    unsigned parsed = 0;
    try {
      parsed = static_cast<unsigned>(std::stoul(size));
    } catch (const std::exception&) {
      throw ContractViolation("malformed seed size in '" + std::string(name) + "'");
    }
    return seed_family(name.substr(0, colon), parsed, q);
  }

  if (name == "repetition") {
    if (index < 1) throw ContractViolation("repetition code needs length >= 1");
    return from_rows(q, {std::vector<unsigned>(index, 1)});
  }
  if (name == "parity") {
    if (index < 2) throw ContractViolation("parity code needs length >= 2");
    auto field = FiniteField::of(q);
    std::vector<std::vector<unsigned>> rows(index - 1, std::vector<unsigned>(index, 0));
    for (unsigned r = 0; r + 1 < index; ++r) {
      rows[r][r] = 1;
      rows[r][index - 1] = field->neg(1);
    }
    return from_rows(q, rows);
  }
  if (name == "hamming_7_4" || name == "extended_hamming_8_4") {
    if (q != 2) throw ContractViolation("Hamming seeds are binary");
    std::vector<std::vector<unsigned>> rows = {
        {1, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 1, 0, 1},
        {0, 0, 1, 0, 0, 1, 1},
        {0, 0, 0, 1, 1, 1, 1},
    };
    if (name == "extended_hamming_8_4") {
      for (auto& r : rows) {
        unsigned parity = 0;
        for (unsigned v : r) parity ^= v;
        r.push_back(parity);
      }
    }
    return from_rows(2, rows);
  }
  throw ContractViolation("unknown seed family '" + std::string(name) + "'");
}

void write_generator(std::ostream& out, const GeneratorMatrix& gen) {
  out << gen.field().order() << ' ' << gen.cols() << ' ' << gen.rows() << '\n';
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    for (std::size_t c = 0; c < gen.cols(); ++c) {
      if (c) out << ' ';
      out << static_cast<unsigned>(gen.at(r, c));
    }
    out << '\n';
  }
}

GeneratorMatrix read_generator(std::istream& in) {
  unsigned q = 0;
  std::size_t n = 0, k = 0;
  if (!(in >> q >> n >> k)) throw ContractViolation("generator file: malformed header, expected 'q n k'");
  std::vector<FieldElement> entries;
  entries.reserve(k * n);
  for (std::size_t i = 0; i < k * n; ++i) {
    unsigned v = 0;
    if (!(in >> v)) throw ContractViolation("generator file: too few entries");
    if (v >= q) throw ContractViolation("generator file: entry outside the field");
    entries.push_back(static_cast<FieldElement>(v));
  }
  return GeneratorMatrix(FiniteField::of(q), k, n, std::move(entries));
}

}  // namespace codedomain
