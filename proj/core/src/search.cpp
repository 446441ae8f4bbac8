#include "codedomain/search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "clique.hpp"
#include "codedomain/errors.hpp"

namespace codedomain {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Exhaustive:
      return "exhaustive";
    case Provenance::ExhaustiveLinear:
      return "exhaustive-linear";
    case Provenance::Greedy:
      return "greedy";
    case Provenance::Random:
      return "random";
    case Provenance::SeededFamily:
      return "seeded-family";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kBitmapCap = std::uint64_t{1} << 22;
constexpr std::uint64_t kMaxExplicitWords = std::uint64_t{1} << 20;

std::uint64_t space_size(unsigned q, unsigned n) {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (s > kSaturated / q) return kSaturated;
    s *= q;
  }
  return s;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 63) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

// Digits of x in base q, coordinate 0 most significant.
void index_to_word(std::uint64_t x, unsigned q, unsigned n, Symbol* out) {
  for (unsigned i = n; i-- > 0;) {
    out[i] = static_cast<Symbol>(x % q);
    x /= q;
  }
}

std::uint64_t word_to_index(const Symbol* w, unsigned q, unsigned n) {
  std::uint64_t x = 0;
  for (unsigned i = 0; i < n; ++i) x = x * q + w[i];
  return x;
}

unsigned word_distance(const Symbol* a, const Symbol* b, unsigned n) {
  unsigned d = 0;
  for (unsigned i = 0; i < n; ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = kSaturated - kSaturated % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Code singleton_code(unsigned q, unsigned n) {
  return Code::from_rows(q, {std::vector<Symbol>(n, 0)});
}

// 1^w 0^(n-w)
std::vector<Symbol> leading_ones(unsigned n, unsigned w) {
  std::vector<Symbol> v(n, 0);
  std::fill(v.begin(), v.begin() + w, Symbol{1});
  return v;
}

SearchBudget remaining(const SearchBudget& b, const BudgetMeter& overall) {
  SearchBudget out = b;
  std::uint64_t used = overall.elapsed_millis();
  out.max_millis = used >= b.max_millis ? 0 : b.max_millis - used;
  return out;
}

// Cliques of the distance >= w graph that extend {0, 1^w 0^(n-w)}; every code
// of minimum distance w is isometric to one containing both words.
struct BranchGraph {
  detail::BitGraph graph;
  std::vector<std::uint64_t> words;  // vertex -> word index
};

BranchGraph branch_graph(unsigned q, unsigned n, unsigned w) {
  const std::uint64_t size = space_size(q, n);
  std::vector<Symbol> e = leading_ones(n, w);
  std::vector<Symbol> zero(n, 0);
  std::vector<Symbol> buf(n);
  std::vector<std::uint64_t> words;
  std::vector<Symbol> flat;
  for (std::uint64_t x = 0; x < size; ++x) {
    index_to_word(x, q, n, buf.data());
    if (word_distance(buf.data(), zero.data(), n) < w) continue;
    if (word_distance(buf.data(), e.data(), n) < w) continue;
    words.push_back(x);
    flat.insert(flat.end(), buf.begin(), buf.end());
  }
  detail::BitGraph g(words.size());
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (word_distance(flat.data() + a * n, flat.data() + b * n, n) >= w) g.add_edge(a, b);
    }
  }
  return BranchGraph{std::move(g), std::move(words)};
}

Code code_from_branch(unsigned q, unsigned n, unsigned w, const BranchGraph& bg,
                      const std::vector<std::uint32_t>& clique, std::size_t take) {
  std::vector<std::vector<Symbol>> rows;
  rows.emplace_back(n, 0);
  rows.push_back(leading_ones(n, w));
  for (std::size_t i = 0; i < clique.size() && rows.size() < take; ++i) {
    std::vector<Symbol> r(n);
    index_to_word(bg.words[clique[i]], q, n, r.data());
    rows.push_back(std::move(r));
  }
  return Code::from_rows(q, rows);
}

Code first_words(unsigned q, unsigned n, std::uint64_t m) {
  std::vector<std::vector<Symbol>> rows(m, std::vector<Symbol>(n));
  for (std::uint64_t x = 0; x < m; ++x) index_to_word(x, q, n, rows[x].data());
  return Code::from_rows(q, rows);
}

Code first_rows(const Code& c, std::size_t m) {
  std::vector<std::vector<Symbol>> rows;
  for (std::size_t i = 0; i < m; ++i) rows.emplace_back(c.row(i).begin(), c.row(i).end());
  return Code::from_rows(c.q(), rows);
}

}  // namespace

ExistsResult exists_code(unsigned q, unsigned n, const BigInt& m, unsigned d, const SearchBudget& budget) {
  if (!is_well_formed(ParamTriple{n, m, d}, q)) {
    throw ContractViolation("exists_code: malformed triple (" + std::to_string(n) + ", " + to_string(m) + ", " +
                            std::to_string(d) + ")");
  }
  ExistsResult out;
  if (m == 1) {
    out.verdict = Verdict::True;
    out.witness = singleton_code(q, n);
    out.note = "singleton";
    return out;
  }
  if (m > pow_of(q, n - d + 1)) {
    out.verdict = Verdict::False;
    out.note = "exceeds the Singleton bound q^(n-d+1)";
    return out;
  }
  auto mm = to_u64(m);
  if (!mm || *mm > kMaxExplicitWords) {
    out.note = "cardinality too large for an explicit witness";
    return out;
  }
  if (*mm == 2) {
    out.verdict = Verdict::True;
    out.witness = Code::from_rows(q, {std::vector<Symbol>(n, 0), leading_ones(n, d)});
    out.note = "two words at distance d";
    return out;
  }
  if (d == 1) {
    out.verdict = Verdict::True;
    out.witness = first_words(q, n, *mm);
    out.note = "first m words";
    return out;
  }

  // Beyond the exhaustive cap no False certificate is possible, and a greedy
  // True would make the verdict depend on the scan order; report Unknown.
  if (space_size(q, n) > kExhaustiveSpaceCap) {
    out.note = "space q^n beyond the exhaustive cap";
    return out;
  }

  BudgetMeter meter(budget);
  SearchBudget greedy_budget = budget;
  greedy_budget.max_nodes = std::max<std::uint64_t>(1, budget.max_nodes / 4);
  GreedyResult g = greedy_code(q, n, d, greedy_budget, *mm);
  if (g.code.size() >= *mm) {
    out.verdict = Verdict::True;
    out.witness = reduce_distance_exact(first_rows(g.code, *mm), d);
    out.note = "greedy";
    return out;
  }

  bool complete = true;
  for (unsigned w = d; w <= n; ++w) {
    BranchGraph bg = branch_graph(q, n, w);
    if (bg.words.size() + 2 < *mm) continue;
    auto res = detail::max_clique(bg.graph, *mm - 2, 0, meter);
    if (res.vertices.size() + 2 >= *mm) {
      out.verdict = Verdict::True;
      out.witness = reduce_distance_exact(code_from_branch(q, n, w, bg, res.vertices, *mm), d);
      out.nodes = meter.nodes();
      out.note = "clique search";
      return out;
    }
    if (!res.complete) {
      complete = false;
      break;
    }
  }
  out.nodes = meter.nodes();
  if (complete) {
    out.verdict = Verdict::False;
    out.note = "exhaustive clique search";
  } else {
    out.note = "budget exhausted during clique search";
  }
  return out;
}

MaxCode max_code(unsigned q, unsigned n, unsigned d, const SearchBudget& budget) {
  if (q < 2 || n < 1 || d < 1 || d > n) throw ContractViolation("max_code: need q >= 2 and 1 <= d <= n");
  if (space_size(q, n) > kExhaustiveSpaceCap) throw ContractViolation("max_code: q^n beyond the exhaustive cap");
  if (d == 1) return MaxCode{first_words(q, n, space_size(q, n)), true};
  BudgetMeter meter(budget);
  Code best = Code::from_rows(q, {std::vector<Symbol>(n, 0), leading_ones(n, d)});
  bool exact = true;
  for (unsigned w = d; w <= n; ++w) {
    BranchGraph bg = branch_graph(q, n, w);
    if (bg.words.size() + 2 <= best.size()) continue;
    auto res = detail::max_clique(bg.graph, 0, best.size() - 2, meter);
    if (res.vertices.size() + 2 > best.size()) {
      best = code_from_branch(q, n, w, bg, res.vertices, res.vertices.size() + 2);
    }
    if (!res.complete) {
      exact = false;
      break;
    }
  }
  return MaxCode{std::move(best), exact};
}

namespace {

struct LinearSearch {
  const FiniteField& f;
  unsigned n, k, r;
  std::vector<std::vector<FieldElement>> tails;  // ordered by weight, heaviest first
  BudgetMeter& meter;
  unsigned best = 0;
  std::vector<std::size_t> best_rows;
  std::vector<std::size_t> rows;
  bool aborted = false;

  std::vector<FieldElement> row_of(std::size_t tail) const {
    std::vector<FieldElement> row(n, 0);
    row[rows.size()] = 1;
    std::copy(tails[tail].begin(), tails[tail].end(), row.begin() + k);
    return row;
  }

  // words: the current subcode (flat, n per word); min_w its minimum weight.
  void dfs(std::size_t start, const std::vector<FieldElement>& words, unsigned min_w) {
    if (rows.size() == k) {
      if (min_w > best) {
        best = min_w;
        best_rows = rows;
      }
      return;
    }
    const std::size_t count = words.size() / n;
    for (std::size_t t = start; t < tails.size(); ++t) {
      unsigned tail_weight = 0;
      for (auto s : tails[t]) tail_weight += s != 0;
      if (tail_weight + 1 <= best) break;
      if (!meter.tick()) {
        aborted = true;
        return;
      }
      std::vector<FieldElement> row = row_of(t);
      std::vector<FieldElement> next = words;
      next.reserve(words.size() * f.order());
      unsigned new_min = min_w;
      for (unsigned c = 1; c < f.order() && new_min > best; ++c) {
        for (std::size_t w = 0; w < count && new_min > best; ++w) {
          unsigned weight = 0;
          for (unsigned i = 0; i < n; ++i) {
            FieldElement s = f.add(words[w * n + i], f.mul(static_cast<FieldElement>(c), row[i]));
            next.push_back(s);
            weight += s != 0;
          }
          new_min = std::min(new_min, weight);
        }
      }
      if (new_min <= best) continue;
      rows.push_back(t);
      dfs(t, next, new_min);
      rows.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

BestDistance best_min_distance(unsigned q, unsigned n, const BigInt& m, const SearchBudget& budget,
                               SearchMode mode) {
  if (q < 2 || n < 1 || m < 1 || m > pow_of(q, n)) {
    throw ContractViolation("best_min_distance: need q >= 2, n >= 1 and 1 <= m <= q^n");
  }
  BestDistance out;
  if (mode == SearchMode::Unstructured) {
    if (m == 1) {
      out.exact = true;
      out.witness = singleton_code(q, n);
      return out;
    }
    unsigned top = n;
    while (top > 1 && m > pow_of(q, n - top + 1)) --top;
    bool exact = true;
    BudgetMeter overall(budget);
    for (unsigned d = top; d >= 1; --d) {
      ExistsResult r = exists_code(q, n, m, d, remaining(budget, overall));
      out.nodes += r.nodes;
      if (r.verdict == Verdict::True) {
        out.d = d;
        out.exact = exact;
        out.witness = std::move(r.witness);
        return out;
      }
      if (r.verdict == Verdict::Unknown) exact = false;
    }
    throw InternalContractError("best_min_distance: no code found even at d = 1");
  }

  auto field = FiniteField::of(q);
  unsigned k = floor_log_q(m, q);
  if (pow_of(q, k) != m) throw ContractViolation("linear search needs m = q^k");
  if (k == 0) {
    out.exact = true;
    out.witness = singleton_code(q, n);
    return out;
  }
  const unsigned r = n - k;
  std::vector<FieldElement> identity_rows(static_cast<std::size_t>(k) * n, 0);
  if (r == 0) {
    for (unsigned i = 0; i < k; ++i) identity_rows[i * n + i] = 1;
    LinearCode lc(GeneratorMatrix(field, k, n, identity_rows));
    out.d = 1;
    out.exact = true;
    out.linear_witness = lc;
    if (space_size(q, k) <= kMaxExplicitWords) out.witness = to_code(lc);
    return out;
  }
  const std::uint64_t tail_count = space_size(q, r);
  if (tail_count > kMaxExplicitWords) throw ContractViolation("linear search: q^(n-k) too large");

  BudgetMeter meter(budget);
  LinearSearch s{*field, n, k, r, {}, meter, 0, {}, {}, false};
  std::vector<Symbol> buf(r);
  for (std::uint64_t x = 0; x < tail_count; ++x) {
    index_to_word(x, q, r, buf.data());
    s.tails.emplace_back(buf.begin(), buf.end());
  }
  std::stable_sort(s.tails.begin(), s.tails.end(), [](const auto& a, const auto& b) {
    auto weight = [](const auto& v) { return std::count_if(v.begin(), v.end(), [](auto e) { return e != 0; }); };
    return weight(a) > weight(b);
  });
  s.dfs(0, std::vector<FieldElement>(n, 0), n + 1);
  out.nodes = meter.nodes();
  out.exact = !s.aborted;
  if (s.best_rows.empty()) return out;
  std::vector<FieldElement> entries(static_cast<std::size_t>(k) * n, 0);
  for (unsigned i = 0; i < k; ++i) {
    entries[i * n + i] = 1;
    std::copy(s.tails[s.best_rows[i]].begin(), s.tails[s.best_rows[i]].end(), entries.begin() + i * n + k);
  }
  LinearCode lc(GeneratorMatrix(field, k, n, std::move(entries)));
  out.d = s.best;
  out.linear_witness = lc;
  if (space_size(q, k) <= kMaxExplicitWords) out.witness = to_code(lc);
  return out;
}

GreedyResult greedy_code(unsigned q, unsigned n, unsigned d, const SearchBudget& budget,
                         std::uint64_t target_size) {
  if (q < 2 || q > kMaxAlphabet || n < 1 || d < 1 || d > n) {
    throw ContractViolation("greedy_code: need 2 <= q <= 256 and 1 <= d <= n");
  }
  std::mt19937_64 rng(stream_seed(budget.rng_seed, 0x6772656564ULL));
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  for (unsigned i = n; i > 1; --i) std::swap(perm[i - 1], perm[bounded(rng, i)]);
  std::vector<Symbol> shift(n);
  for (auto& s : shift) s = static_cast<Symbol>(bounded(rng, q));

  const std::uint64_t size = space_size(q, n);
  const bool use_bitmap = size <= kBitmapCap;
  std::vector<std::uint8_t> covered(use_bitmap ? size : 0, 0);
  std::vector<std::uint64_t> place(n);
  for (unsigned i = n; i-- > 0;) place[i] = (i + 1 == n) ? 1 : place[i + 1] * q;

  BudgetMeter meter(budget);
  GreedyResult out{singleton_code(q, n), true};
  std::vector<Symbol> kept;  // flat
  std::size_t kept_count = 0;
  std::vector<Symbol> digits(n);
  std::vector<Symbol> word(n);

  // Marks the Hamming ball of radius d-1 around the word at index base.
  std::function<void(unsigned, unsigned, std::uint64_t)> mark = [&](unsigned from, unsigned left,
                                                                   std::uint64_t index) {
    covered[index] = 1;
    if (left == 0) return;
    for (unsigned i = from; i < n; ++i) {
      std::uint64_t base = index - word[i] * place[i];
      for (unsigned s = 0; s < q; ++s) {
        if (s != word[i]) mark(i + 1, left - 1, base + s * place[i]);
      }
    }
  };

  for (std::uint64_t x = 0; x < size; ++x) {
    if (!meter.tick()) {
      out.complete = false;
      break;
    }
    index_to_word(x, q, n, digits.data());
    for (unsigned i = 0; i < n; ++i) {
      word[perm[i]] = static_cast<Symbol>((digits[i] + shift[perm[i]]) % q);
    }
    bool ok;
    if (use_bitmap) {
      ok = !covered[word_to_index(word.data(), q, n)];
    } else {
      ok = true;
      for (std::size_t w = 0; w < kept_count && ok; ++w) ok = word_distance(kept.data() + w * n, word.data(), n) >= d;
    }
    if (!ok) continue;
    kept.insert(kept.end(), word.begin(), word.end());
    ++kept_count;
    if (use_bitmap) mark(0, d - 1, word_to_index(word.data(), q, n));
    if (target_size && kept_count >= target_size) break;
  }
  std::vector<std::vector<Symbol>> rows(kept_count);
  for (std::size_t w = 0; w < kept_count; ++w) rows[w].assign(kept.begin() + w * n, kept.begin() + (w + 1) * n);
  out.code = Code::from_rows(q, rows);
  return out;
}

std::vector<RandomSample> random_ensemble(unsigned q, unsigned n, std::uint64_t m, std::size_t trials,
                                          const SearchBudget& budget) {
  if (q < 2 || q > kMaxAlphabet || n < 1 || m < 1) throw ContractViolation("random_ensemble: bad parameters");
  const std::uint64_t size = space_size(q, n);
  if (m > size) throw ContractViolation("random_ensemble: m exceeds q^n");
  if (m > kMaxExplicitWords) throw ContractViolation("random_ensemble: m too large for explicit codes");
  BudgetMeter meter(budget);
  std::vector<RandomSample> out;
  for (std::size_t t = 0; t < trials; ++t) {
    if (!meter.tick()) break;
    std::mt19937_64 rng(stream_seed(budget.rng_seed, t));
    std::vector<std::vector<Symbol>> rows;
    rows.reserve(m);
    if (size <= kMaxExplicitWords) {
      std::vector<std::uint64_t> idx(size);
      for (std::uint64_t i = 0; i < size; ++i) idx[i] = i;
      for (std::uint64_t i = 0; i < m; ++i) {
        std::swap(idx[i], idx[i + bounded(rng, size - i)]);
        std::vector<Symbol> w(n);
        index_to_word(idx[i], q, n, w.data());
        rows.push_back(std::move(w));
      }
    } else {
      std::set<std::vector<Symbol>> seen;
      while (rows.size() < m) {
        std::vector<Symbol> w(n);
        for (auto& s : w) s = static_cast<Symbol>(bounded(rng, q));
        if (seen.insert(w).second) rows.push_back(std::move(w));
      }
    }
    Code c = Code::from_rows(q, rows);
    unsigned d = min_distance(c).d;
    out.push_back(RandomSample{std::move(c), d});
  }
  return out;
}

namespace {

struct TripleLess {
  bool operator()(const std::tuple<unsigned, BigInt, unsigned>& a,
                  const std::tuple<unsigned, BigInt, unsigned>& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  }
};

class CloudBuilder {
 public:
  explicit CloudBuilder(unsigned q) : q_(q) {}

  void add(unsigned n, const BigInt& m, unsigned d, Provenance p) {
    auto key = std::make_tuple(n, m, d);
    if (entries_.count(key)) return;
    CodeParams params(q_, n, m, d);
    CodePoint pt = code_point(params);
    entries_.emplace(key, CloudEntry{std::move(params), std::move(pt), p});
  }

  // One cardinality per floor(log_q m) class in [2, max_m], plus max_m.
  void add_range(unsigned n, const BigInt& max_m, unsigned d, Provenance p) {
    if (max_m < 2) return;
    if (q_ > 2) add(n, 2, d, p);
    for (BigInt v = q_; v <= max_m; v *= q_) add(n, v, d, p);
    add(n, max_m, d, p);
  }

  std::vector<CloudEntry> take() {
    std::vector<CloudEntry> out;
    for (auto& kv : entries_) out.push_back(std::move(kv.second));
    return out;
  }

 private:
  unsigned q_;
  std::map<std::tuple<unsigned, BigInt, unsigned>, CloudEntry, TripleLess> entries_;
};

bool is_prime_power(unsigned q) {
  try {
    FiniteField::of(q);
    return true;
  } catch (const ContractViolation&) {
    return false;
  }
}

std::vector<LinearCode> family_codes(unsigned q, unsigned n_max) {
  std::vector<LinearCode> out;
  if (!is_prime_power(q)) return out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(seed_family("repetition", n, q));
  for (unsigned n = 2; n <= n_max; ++n) {
    if (space_size(q, n - 1) <= 256) out.push_back(seed_family("parity", n, q));
  }
  if (q == 2 && n_max >= 7) out.push_back(seed_family("hamming_7_4"));
  if (q == 2 && n_max >= 8) out.push_back(seed_family("extended_hamming_8_4"));
  return out;
}

}  // namespace

PointCloud enumerate_point_cloud(unsigned q, unsigned n_max, const std::vector<Provenance>& strategies,
                                 const SearchBudget& budget) {
  if (q < 2 || q > kMaxAlphabet || n_max < 1) throw ContractViolation("enumerate_point_cloud: need q >= 2, N >= 1");
  PointCloud cloud;
  cloud.q = q;
  cloud.n_max = n_max;
  CloudBuilder b(q);
  BudgetMeter overall(budget);
  for (unsigned n = 1; n <= n_max; ++n) b.add(n, 1, 0, strategies.empty() ? Provenance::Exhaustive : strategies[0]);

  for (Provenance strategy : strategies) {
    switch (strategy) {
      case Provenance::Exhaustive:
        for (unsigned n = 1; n <= n_max && space_size(q, n) <= 256; ++n) {
          for (unsigned d = 1; d <= n; ++d) {
            MaxCode mc = max_code(q, n, d, remaining(budget, overall));
            cloud.complete = cloud.complete && mc.exact;
            b.add_range(n, static_cast<unsigned long>(mc.code.size()), d, strategy);
          }
        }
        break;
      case Provenance::ExhaustiveLinear:
        if (!is_prime_power(q)) break;
        for (unsigned n = 1; n <= n_max; ++n) {
          for (unsigned k = 1; k <= n && space_size(q, k) <= 4096 && space_size(q, n - k) <= 4096; ++k) {
            BestDistance bd = best_min_distance(q, n, pow_of(q, k), remaining(budget, overall), SearchMode::Linear);
            cloud.complete = cloud.complete && bd.exact;
            for (unsigned d = 1; d <= bd.d; ++d) b.add(n, pow_of(q, k), d, strategy);
          }
        }
        break;
      case Provenance::Greedy:
        for (unsigned n = 1; n <= n_max && space_size(q, n) <= kBitmapCap; ++n) {
          for (unsigned d = 1; d <= n; ++d) {
            GreedyResult g = greedy_code(q, n, d, remaining(budget, overall));
            cloud.complete = cloud.complete && g.complete;
            b.add_range(n, static_cast<unsigned long>(g.code.size()), d, strategy);
          }
        }
        break;
      case Provenance::Random:
        for (unsigned n = 1; n <= n_max; ++n) {
          for (unsigned t = 1; t <= n && space_size(q, t) <= 4096; ++t) {
            auto samples = random_ensemble(q, n, space_size(q, t), 4, remaining(budget, overall));
            for (const auto& s : samples) b.add(n, static_cast<unsigned long>(s.code.size()), s.d, strategy);
          }
        }
        break;
      case Provenance::SeededFamily: {
        std::set<std::tuple<unsigned, BigInt, unsigned>, TripleLess> seen;
        std::vector<Code> frontier;
        auto visit = [&](Code c) {
          CodeParams p = params(c);
          if (!seen.insert(std::make_tuple(p.n, p.m, p.d)).second) return;
          b.add(p.n, p.m, p.d, strategy);
          frontier.push_back(std::move(c));
        };
        for (const auto& lc : family_codes(q, n_max)) visit(to_code(lc));
        BudgetMeter meter(remaining(budget, overall));
        while (!frontier.empty()) {
          if (!meter.tick()) {
            cloud.complete = false;
            break;
          }
          Code c = std::move(frontier.back());
          frontier.pop_back();
          if (c.length() < n_max) visit(lengthen(c));
          if (c.length() > 1 && c.size() > 1 && min_distance(c).d >= 2) visit(puncture(c));
          if (c.length() > 1 && c.size() > 1) visit(shorten(c));
        }
        break;
      }
    }
  }
  cloud.entries = b.take();
  return cloud;
}

MultiplicityCount multiplicity_in_range(const CodePoint& point, unsigned q, unsigned n_max,
                                        const SearchBudget& budget) {
  MultiplicityCount out;
  const Rational& r = point.r;
  const Rational& delta = point.delta;
  if (r < 0 || r > 1 || delta < 0 || delta > 1) return out;
  BudgetMeter overall(budget);
  for (unsigned n = 1; n <= n_max; ++n) {
    Rational tn = r * n;
    Rational dn = delta * n;
    if (tn.get_den() != 1 || dn.get_den() != 1) continue;
    const unsigned t = static_cast<unsigned>(tn.get_num().get_ui());
    const unsigned d = static_cast<unsigned>(dn.get_num().get_ui());
    if (d == 0) {
      if (t == 0) {
        out.count += 1;
        out.maximal.push_back(ParamTriple{n, 1, 0});
      }
      continue;
    }
    BigInt lo = pow_of(q, t);
    if (lo < 2) lo = 2;
    BigInt hi = pow_of(q, t + 1) - 1;
    if (hi > pow_of(q, n)) hi = pow_of(q, n);
    if (lo > hi) continue;
    auto probe = [&](const BigInt& m) {
      ExistsResult e = exists_code(q, n, m, d, remaining(budget, overall));
      if (e.verdict == Verdict::Unknown) {
        out.complete = false;
        out.unknown.push_back("(" + std::to_string(n) + ", " + to_string(m) + ", " + std::to_string(d) + "): " +
                              e.note);
      }
      return e.verdict;
    };
    if (probe(lo) != Verdict::True) continue;
    BigInt good = lo;
    BigInt bad = hi + 1;
    while (bad - good > 1) {
      BigInt mid = (good + bad) / 2;
      if (probe(mid) == Verdict::True) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    out.count += good - lo + 1;
    out.maximal.push_back(ParamTriple{n, good, d});
  }
  return out;
}

std::optional<Seed> GreedySeedSource::find(const SeedRequest& request, const SearchBudget& budget,
                                           std::vector<std::string>& log) const {
  const unsigned q = request.q;
  const unsigned len = request.length;
  std::optional<Seed> best;
  if (is_prime_power(q)) {
    std::vector<std::pair<std::string, LinearCode>> candidates;
    candidates.emplace_back("repetition:" + std::to_string(len), seed_family("repetition", len, q));
    if (len >= 2) candidates.emplace_back("parity:" + std::to_string(len), seed_family("parity", len, q));
    if (q == 2 && len >= 7) candidates.emplace_back("hamming_7_4", seed_family("hamming_7_4"));
    if (q == 2 && len >= 8) candidates.emplace_back("extended_hamming_8_4", seed_family("extended_hamming_8_4"));
    for (auto& [name, lc] : candidates) {
      unsigned k = static_cast<unsigned>(lc.dimension());
      if (space_size(q, k) > 1024) {
        log.push_back(name + ": skipped, too many codewords");
        continue;
      }
      unsigned d = lc.min_weight();
      if (d >= request.min_distance && k >= request.min_floor_log) {
        log.push_back(name + ": accepted");
        return Seed{to_code(lc), name};
      }
      log.push_back(name + ": rejected (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
    }
  }
  const std::uint64_t target = space_size(q, request.min_floor_log);
  if (target > kMaxExplicitWords) {
    log.push_back("greedy: target cardinality too large");
    return std::nullopt;
  }
  GreedyResult g = greedy_code(q, len, request.min_distance, budget, target);
  std::string name = "greedy(n=" + std::to_string(len) + ",d=" + std::to_string(request.min_distance) + ")";
  if (g.code.size() >= target) {
    log.push_back(name + ": accepted with " + std::to_string(g.code.size()) + " words");
    return Seed{std::move(g.code), name};
  }
  log.push_back(name + ": only " + std::to_string(g.code.size()) + " words");
  return std::nullopt;
}

}  // namespace codedomain
