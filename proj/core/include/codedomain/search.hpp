#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codedomain/code.hpp"
#include "codedomain/linear_code.hpp"
#include "codedomain/search_budget.hpp"
#include "codedomain/spoiling.hpp"

namespace codedomain {

/// Largest q^n on which exists_code runs the exact clique search.
inline constexpr std::uint64_t kExhaustiveSpaceCap = 4096;

enum class Verdict { True, False, Unknown };

const char* to_string(Verdict v);

struct ExistsResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Code> witness;  // set for True; parameters are exactly (n, m, d)
  std::uint64_t nodes = 0;
  std::string note;             // how the verdict was reached
};

/// Budgeted decision of whether a code with exact parameters (n, m, d) over q
/// letters exists. False is returned only after an exhaustive search (or a
/// counting bound); Unknown when the budget ran out or the space is beyond
/// kExhaustiveSpaceCap and the constructive attempts failed. Throws
/// ContractViolation for a malformed triple.
ExistsResult exists_code(unsigned q, unsigned n, const BigInt& m, unsigned d, const SearchBudget& budget);

enum class SearchMode { Unstructured, Linear };

struct BestDistance {
  unsigned d = 0;
  bool exact = false;  // false: d is only a realized lower bound
  std::optional<Code> witness;
  std::optional<LinearCode> linear_witness;
  std::uint64_t nodes = 0;
};

/// Maximum minimum distance of a code with n and m fixed. Linear mode needs a
/// prime power q and m = q^k, and searches systematic generators [I | A].
BestDistance best_min_distance(unsigned q, unsigned n, const BigInt& m, const SearchBudget& budget,
                               SearchMode mode = SearchMode::Unstructured);

/// Size of the largest code with distance >= d (an exact A_q(n, d) when
/// `exact`), with a witness. Requires q^n <= kExhaustiveSpaceCap.
struct MaxCode {
  Code code;
  bool exact = false;
};
MaxCode max_code(unsigned q, unsigned n, unsigned d, const SearchBudget& budget);

struct GreedyResult {
  Code code;
  bool complete = true;  // false when the budget stopped the scan early
};

/// Greedy code with distance >= d: scans all q^n words in lexicographic order
/// transported by a seeded isometry (coordinate permutation and per-coordinate
/// symbol shift) and keeps each word at distance >= d from the kept ones. Stops
/// early once target_size words are kept (0 = no target).
GreedyResult greedy_code(unsigned q, unsigned n, unsigned d, const SearchBudget& budget,
                         std::uint64_t target_size = 0);

struct RandomSample {
  Code code;
  unsigned d = 0;
};

/// `trials` codes of m distinct uniformly random words with their exact
/// minimum distances. Trial t draws from its own stream derived from
/// (budget.rng_seed, t), so results are independent of evaluation order.
std::vector<RandomSample> random_ensemble(unsigned q, unsigned n, std::uint64_t m, std::size_t trials,
                                          const SearchBudget& budget);

enum class Provenance { Exhaustive, ExhaustiveLinear, Greedy, Random, SeededFamily };

const char* to_string(Provenance p);

struct CloudEntry {
  CodeParams params;
  CodePoint point;
  Provenance provenance = Provenance::Exhaustive;
};

struct PointCloud {
  unsigned q = 2;
  unsigned n_max = 1;
  std::vector<CloudEntry> entries;  // sorted by (n, m, d), one per triple
  bool complete = true;             // false when some strategy hit its budget
};

/// Realized parameter triples with n <= n_max from the chosen strategies.
/// Within each (n, d) one cardinality per value of floor(log_q m) is kept,
/// plus the largest one found, so every reachable code point is represented.
PointCloud enumerate_point_cloud(unsigned q, unsigned n_max, const std::vector<Provenance>& strategies,
                                 const SearchBudget& budget);

struct MultiplicityCount {
  BigInt count = 0;                    // distinct verified triples with cp = point
  std::vector<ParamTriple> maximal;    // per length, the largest verified m
  std::vector<std::string> unknown;    // probes the budget could not settle
  bool complete = true;
};

/// Counts the realizable triples (n, m, d), n <= n_max, whose code point is
/// exactly `point`. Existence is monotone in m, so per length the largest m is
/// located by bisection over exists_code.
MultiplicityCount multiplicity_in_range(const CodePoint& point, unsigned q, unsigned n_max,
                                        const SearchBudget& budget);

/// Seed source for realize_point: built-in linear families first, then a
/// greedy code at the requested length.
class GreedySeedSource : public SeedSource {
 public:
  std::optional<Seed> find(const SeedRequest& request, const SearchBudget& budget,
                           std::vector<std::string>& log) const override;
};

}  // namespace codedomain
