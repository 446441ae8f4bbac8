#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codedomain/code.hpp"
#include "codedomain/linear_code.hpp"
#include "codedomain/search_budget.hpp"

namespace codedomain {

enum class SpoilKind { Lengthen, Puncture, Shorten };

const char* to_string(SpoilKind kind);

/// One parameter-degrading transformation. `coordinate` is the appended
/// position for Lengthen, the deleted position for Puncture and Shorten;
/// `symbol` is the appended symbol (Lengthen) or the kept fiber (Shorten).
struct SpoilStep {
  SpoilKind kind = SpoilKind::Lengthen;
  std::size_t coordinate = 0;
  Symbol symbol = 0;

  friend bool operator==(const SpoilStep&, const SpoilStep&) = default;
};

struct SpoilTrace {
  CodeParams initial;
  std::vector<SpoilStep> steps;
  CodeParams final_params;
};

/// Appends the symbol 0 to every word: [n, m, d] -> [n+1, m, d].
Code lengthen(const Code& c, SpoilTrace* trace = nullptr);

/// Deletes the lowest coordinate on which a minimal-distance witness pair
/// differs: [n, m, d] -> [n-1, m, d-1]. Throws DistanceTooSmall when d < 2 and
/// ContractViolation when n == 1.
Code puncture(const Code& c, SpoilTrace* trace = nullptr);

/// Picks the lowest non-constant coordinate, keeps its largest symbol fiber
/// (ties to the smallest symbol) and deletes the coordinate. The result has
/// m/q <= m' < m and distance >= d. Throws DegenerateInput for singletons and
/// ContractViolation when n == 1.
Code shorten(const Code& c, SpoilTrace* trace = nullptr);

/// Replays a single recorded step. Throws ContractViolation if the step does
/// not apply to c.
Code apply_step(const Code& c, const SpoilStep& step);

/// Replays every step and checks the recorded parameters at both ends. Throws
/// InternalContractError on a mismatch.
Code replay(const Code& initial, const SpoilTrace& trace);

/// Alternating puncture/lengthen rounds until the minimum distance is exactly
/// d_target; length and cardinality are unchanged.
Code reduce_distance_exact(const Code& c, unsigned d_target, SpoilTrace* trace = nullptr);

/// Shorten/lengthen rounds until floor(log_q m) equals t_target; length is
/// unchanged and the distance never decreases. Each shorten keeps at least m/q
/// words, so the floor drops by at most one per round. Gives up with
/// InternalContractError after n*q rounds.
Code reduce_floor_logcard(const Code& c, unsigned t_target, SpoilTrace* trace = nullptr);

/// Linear counterparts; each keeps the result linear.
LinearCode lengthen(const LinearCode& c);
/// Deletes the lowest nonzero coordinate of a minimum-weight codeword.
LinearCode puncture(const LinearCode& c);
/// Keeps the subcode vanishing on the lowest non-zero column, then deletes
/// that column: [n, k, d] -> [n-1, k-1, >= d].
LinearCode shorten(const LinearCode& c);

/// Target code point (k/n, d/n) of the realize procedure.
struct RealizeTarget {
  unsigned k = 1;
  unsigned n = 2;
  unsigned d = 1;
};

struct SeedRequest {
  unsigned q = 2;
  unsigned length = 1;          // the seed may be shorter; it is padded up
  unsigned min_distance = 1;    // required distance after padding
  unsigned min_floor_log = 0;   // required floor(log_q m)
};

struct Seed {
  Code code;
  std::string origin;
};

/// Supplies seed codes for realize_point.
class SeedSource {
 public:
  virtual ~SeedSource() = default;
  /// A code of length <= request.length with distance >= min_distance and
  /// floor(log_q m) >= min_floor_log, or nullopt. Attempts are appended to log.
  virtual std::optional<Seed> find(const SeedRequest& request, const SearchBudget& budget,
                                   std::vector<std::string>& log) const = 0;
};

struct RealizedCode {
  unsigned multiple = 1;  // the a-th code has length a*n
  Code seed;
  std::string seed_origin;
  Code code;
  SpoilTrace trace;  // replays seed -> code
};

/// Produces `count` codes, the a-th of length a*n with floor(log_q m) = a*k and
/// distance a*d, so every one has the code point (k/n, d/n). Throws
/// ContractViolation unless 0 < k < n and 0 < d < n; throws SeedNotFound when
/// the seed source cannot supply a seed.
std::vector<RealizedCode> realize_point(const RealizeTarget& target, unsigned q, std::size_t count,
                                        const SeedSource& seeds, const SearchBudget& budget);

struct MultiplicityWitness {
  std::vector<Code> codes;          // j-fold lengthenings, j = 1..M
  std::vector<CodeParams> params;
  std::vector<CodePoint> points;
  CodePoint limit;                  // the points converge to (0, 0)
};

/// Repeated lengthening: pairwise distinct parameter triples whose code points
/// (floor(log_q m)/(n+j), d/(n+j)) decrease to the limit (0, 0).
MultiplicityWitness multiplicity_witness(const Code& c, std::size_t count);

/// JSON form of a trace: initial/final parameters and the step list.
std::string trace_to_json(const SpoilTrace& trace);
SpoilTrace trace_from_json(const std::string& text);

}  // namespace codedomain
