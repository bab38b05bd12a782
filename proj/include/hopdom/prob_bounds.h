#ifndef HOPDOM_PROB_BOUNDS_H_
#define HOPDOM_PROB_BOUNDS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopdom/graph.h"
#include "hopdom/oracle.h"

namespace hopdom {

// Which restrained construction / functional:
//   kRh:  Y = {i not in X u Z : N(i)  subset of X u Z}, f_rh
//   k2sr: Y = {i not in X u Z : N2(i) subset of X u Z}, f_2sr
enum class RestraintKind { kRh, k2sr };

std::string_view RestraintKindName(RestraintKind kind);
std::optional<RestraintKind> RestraintKindFromName(std::string_view name);

// The set kind whose sets the construction produces.
SetKind TargetKind(RestraintKind kind);

// A point of the unit cube [0,1]^n.
class ProbVector {
 public:
  // Throws kBadParams if any entry is outside [0,1] or not a number.
  explicit ProbVector(std::vector<double> p);
  static ProbVector Uniform(int n, double p);
  static ProbVector Indicator(int n, std::span<const Vertex> set);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }
  std::span<const double> values() const { return p_; }

 private:
  std::vector<double> p_;
};

// Evaluates
//   sum p_i + sum (1-p_i) Q_i
//     + sum (1-p_i) (1 - (1-p_i) Q_i) prod_{j in R(i)} [p_j + (1-p_j) Q_j]
// with Q_i = prod_{j in N2(i)} (1-p_j) and R(i) = N(i) for kRh, N2(i) for
// k2sr. Throws kDimensionMismatch when p.size() != n.
double EvalF(const Graph& g, const ProbVector& p, RestraintKind kind);
// `dist2` must be Dist2Graph(g).
double EvalF(const Graph& g, const Graph& dist2, const ProbVector& p,
             RestraintKind kind);

struct RandomSetTrace {
  std::vector<Vertex> x;
  std::vector<Vertex> z;
  std::vector<Vertex> y;
  std::vector<Vertex> d;  // x u z u y, sorted
  uint64_t seed = 0;
  std::vector<double> p;
};

// X holds each vertex independently with probability p_i (one draw per
// vertex, in vertex order, from Rng(seed)); then
//   Z = {i not in X : N2(i) and X disjoint}
//   Y = per RestraintKind above.
RandomSetTrace RandomRestrainedSet(const Graph& g, const ProbVector& p,
                                   uint64_t seed, RestraintKind kind);

struct ExpectedSizeResult {
  int64_t samples = 0;
  double mean = 0;
  double std_error = 0;
  double f_value = 0;
  // Trials whose D failed the target set kind's predicate.
  int64_t predicate_failures = 0;
};

// Monte Carlo estimate of E|D|; trial t draws from Rng::Substream(seed, t).
// Throws kBadParams when samples < 1.
ExpectedSizeResult ExpectedSizeCheck(const Graph& g, const ProbVector& p,
                                     RestraintKind kind, int64_t samples,
                                     uint64_t seed);

enum class MinimizeMode { kBinaryExhaustive, kMultistartDescent };

struct MinimizeResult {
  ProbVector p;
  double value;
};

struct MinimizeOptions {
  MinimizeMode mode = MinimizeMode::kBinaryExhaustive;
  int starts = 8;  // multistart only
  uint64_t seed = 1;
  OracleConfig oracle;  // size cap for the binary mode
};

// Binary mode: exact minimum of f over {0,1}^n, first minimiser in mask
// order (kOracleLimitExceeded above the cap). Multistart mode: projected
// coordinate descent from `starts` seeded random points; returns the best
// point reached and f there.
MinimizeResult MinimizeF(const Graph& g, RestraintKind kind,
                         const MinimizeOptions& options = {});

// 2n (ln(dh+1) + 1) / (dh+1) for dh = delta_h, after checking that f at the
// uniform vector p' = ln(dh+1)/(dh+1) does not exceed it (kInternal if it
// does). Throws kHypothesisViolated when delta_h = 0.
double UniformPBound(const Graph& g, RestraintKind kind);

// ---------------------------------------------------------------------------
// Bound catalogue

enum class Verdict { kNotApplicable, kUnknown, kHolds, kViolated };

std::string_view VerdictName(Verdict v);

struct ExactValue {
  enum class State { kUnknown, kOptimal, kInfeasible };
  State state = State::kUnknown;
  int value = 0;

  static ExactValue Optimal(int v) { return {State::kOptimal, v}; }
  static ExactValue Infeasible() { return {State::kInfeasible, 0}; }
  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

struct Hypothesis {
  std::string name;
  bool satisfied;
};

struct BoundEntry {
  std::string id;
  SetKind parameter;
  std::string formula;
  double value;  // NaN when a formula divides by delta_h = 0 etc.
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
  ExactValue exact;
  Verdict holds = Verdict::kNotApplicable;
};

struct BoundReport {
  int n = 0;
  int delta = 0;
  int delta_h = 0;
  int nu = 0;
  int nu_h = 0;
  std::optional<int> gamma_h;
  std::vector<BoundEntry> entries;
};

// Absolute slack for comparing integer optima against real-valued bounds.
inline constexpr double kBoundSlack = 1e-9;

// Every upper bound with its hypotheses evaluated. Entries whose hypotheses
// mention nu >= gamma_h are inapplicable when gamma_h is absent.
BoundReport BoundCatalog(const Graph& g, int nu, int nu_h,
                         std::optional<int> gamma_h);

// Fills `exact` and `holds` from known optima. Parameters missing from the
// map stay kUnknown.
void AttachExactValues(BoundReport& report,
                       const std::map<SetKind, ExactValue>& exact);

int CountViolations(const BoundReport& report);

// gamma_h(G) = gamma(Dist(G;2)) and gamma_2step(G) = gamma_t(Dist(G;2)),
// both sides by exhaustive search.
struct IdentityCheck {
  std::string id;
  ExactValue lhs;
  ExactValue rhs;
  bool holds;
};

std::vector<IdentityCheck> CheckDistanceTwoIdentities(
    const Graph& g, const OracleConfig& config = {});

}  // namespace hopdom

#endif  // HOPDOM_PROB_BOUNDS_H_
