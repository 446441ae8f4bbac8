#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codedomain/bounds.hpp"
#include "codedomain/geometry.hpp"

namespace codedomain {

/// Sound ball test: returning true is a proof for the ball at hand; false
/// means "not proven at this stage". Larger stages may prove more.
using BallProver = std::function<bool(const RatBall& ball, unsigned stage)>;

/// Common machinery of r.e. and co-r.e. presentations: a prover plus a
/// resumable dovetailed enumeration of rational balls. Stage s covers
/// denominators up to s, radii r/den with r <= min(s, 3 den), and centers with
/// numerators in [-den, 2 den], i.e. the ambient square [-1, 2]^2.
class BallPresentation {
 public:
  const std::string& name() const noexcept { return name_; }
  /// Open balls for r.e. presentations, closed balls for co-r.e. ones.
  BallKind ball_kind() const noexcept { return kind_; }
  /// The prover gives its final answer already at stage 1.
  bool stage_independent() const noexcept { return stage_independent_; }

  bool prove(const RatBall& ball, unsigned stage) const { return prover_(ball, stage); }

  /// Runs at most max_checks ball tests and returns the balls newly proven,
  /// in enumeration order. Each ball is emitted at most once.
  std::vector<RatBall> next(std::size_t max_checks);
  /// Ball tests performed so far.
  std::uint64_t progress() const noexcept { return checks_; }
  unsigned stage() const noexcept { return stage_; }

 protected:
  BallPresentation(std::string name, BallKind kind, BallProver prover, bool stage_independent);

 private:
  std::string name_;
  BallKind kind_;
  BallProver prover_;
  bool stage_independent_;
  std::uint64_t checks_ = 0;
  unsigned stage_ = 1;
  long den_ = 1, rad_ = 1, cx_ = -1, cy_ = -1;
  std::set<std::string> emitted_;
};

/// Enumerates open balls I with I meeting Y.
class REPresentation : public BallPresentation {
 public:
  REPresentation(std::string name, BallProver prover, bool stage_independent = false)
      : BallPresentation(std::move(name), BallKind::Open, std::move(prover), stage_independent) {}
};

/// Enumerates closed balls whose closure misses Y.
class CoREPresentation : public BallPresentation {
 public:
  CoREPresentation(std::string name, BallProver prover, bool stage_independent = false)
      : BallPresentation(std::move(name), BallKind::Closed, std::move(prover), stage_independent) {}
};

/// Point stream indexed from 0; nullopt marks the end of a finite stream.
using PointStream = std::function<std::optional<RatPoint>(std::size_t index)>;

/// Closure of the range of a point stream: at stage s a ball is proven once
/// it contains one of the first s points.
REPresentation re_from_dense_points(PointStream stream);

/// Curve working precision at a stage: 32 * 2^(stage-1) bits, capped.
long stage_precision(unsigned stage);
inline constexpr unsigned kMaxStage = 7;

/// Graph {(delta, f(delta)) : delta in [0, 1]} of a continuous non-increasing
/// curve. Throws ContractViolation for discontinuous curves.
REPresentation re_from_curve(const BoundCurve& curve);
CoREPresentation core_from_curve(const BoundCurve& curve);

/// Monotone domain U = {(delta, R) : 0 <= delta <= 1, 0 <= R <= f(delta)}.
REPresentation domain_re_from_curve(const BoundCurve& curve);
CoREPresentation domain_core_from_curve(const BoundCurve& curve);

struct ColumnRange {
  std::int64_t lo = 0;  // lowest row
  std::int64_t hi = -1; // highest row; hi < lo means empty
};

struct NStrip {
  std::int64_t n_grid = 1;
  std::vector<GridBall> balls;       // sorted (i, j)
  std::vector<ColumnRange> columns;  // per column i
  Polyline upper;                    // Gamma_+: top edges, then the right end segment
  Polyline lower;                    // Gamma_-: the left end segment, then bottom edges
  bool connected = false;            // column ranges contiguous and 8-connected
  bool width_ok = false;             // boundaries within 2/N of each other
  bool touches_corner = false;       // contains the corner ball (0, N-1) or (N-1, 0)
};

struct StripResult {
  NStrip strip;
  bool complete = false;  // the strip satisfies every invariant
  unsigned rounds = 0;
  std::string status;
};

/// Runs the co-r.e. prover on all N^2 grid squares with growing stages until
/// the unproven squares form a valid N-strip, a round changes nothing, the
/// stage cap is reached or the timeout expires. Unproven squares stay in the
/// strip, so strips can only be too wide, never too thin.
StripResult build_strip(const CoREPresentation& co, std::int64_t n_grid, std::uint64_t timeout_millis);

/// Builds strip bookkeeping (ranges, boundary polylines, flags) from a ball set.
NStrip make_strip(std::int64_t n_grid, std::vector<GridBall> balls);

enum class PointSide { Below, Inside, Above };

const char* to_string(PointSide side);

/// Exact classification of points of [0, 1]^2 against a connected strip. A
/// point is Inside when every grid square whose closure holds it belongs to the
/// strip; otherwise a square outside the strip (proven disjoint from the
/// curve) decides Below or Above.
std::vector<PointSide> classify_points(const std::vector<RatPoint>& points, const NStrip& strip);

struct AdmissibleSet {
  std::int64_t n_grid = 1;
  std::vector<GridBall> exceptional;  // X
  std::vector<GridBall> upper;        // U_+: proven disjoint from U
  std::vector<GridBall> lower;        // U_-: proven to meet U
};

/// (a) at most one ball per row and per column; (b) further right is strictly lower.
bool is_admissible(const std::vector<GridBall>& balls);

struct ApproxResult {
  AdmissibleSet set;
  std::vector<GridBall> unamended;  // X before the amendment pass
  bool complete = false;
  unsigned rounds = 0;
  std::string status;
};

/// Classifies grid squares with the co-r.e. prover (closed squares) and the
/// r.e. prover (open squares) at growing stages. Stops once the amended
/// undecided set is N-admissible, a round changes nothing, or the cap or
/// timeout is hit. Amendment: undecided squares not touching U_- move to U_+,
/// then those not touching U_+ move to U_-. Throws InternalContractError when
/// the final set is not admissible (the input was not a monotone domain).
ApproxResult two_sided_approx(const REPresentation& re, const CoREPresentation& co, std::int64_t n_grid,
                              std::uint64_t timeout_millis);

struct CurveEstimate {
  Polyline upper;                     // lower boundary of U_+
  Polyline lower;                     // upper boundary of U_-, one row down
  std::vector<Rational> upper_values; // per column
  std::vector<Rational> lower_values; // per column
  std::vector<RatPoint> ball_estimates;  // lower-left corner of each exceptional ball
  Rational error_bound;               // 1/N
};

CurveEstimate curve_estimate(const AdmissibleSet& adm);

/// JSON forms used by the CLI.
std::string strip_to_json(const StripResult& result);
std::string approx_to_json(const ApproxResult& result, const CurveEstimate& estimate);

}  // namespace codedomain
