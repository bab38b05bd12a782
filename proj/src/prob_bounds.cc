#include "hopdom/prob_bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "hopdom/error.h"
#include "hopdom/random.h"

namespace hopdom {

std::string_view RestraintKindName(RestraintKind kind) {
  return kind == RestraintKind::kRh ? "rh" : "2sr";
}

std::optional<RestraintKind> RestraintKindFromName(std::string_view name) {
  if (name == "rh") return RestraintKind::kRh;
  if (name == "2sr") return RestraintKind::k2sr;
  return std::nullopt;
}

SetKind TargetKind(RestraintKind kind) {
  return kind == RestraintKind::kRh ? SetKind::kRestrainedHop
                                    : SetKind::kTwoStepRestrained;
}

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
  for (double x : p_) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kBadParams, "probability outside [0,1]");
    }
  }
}

ProbVector ProbVector::Uniform(int n, double p) {
  return ProbVector(std::vector<double>(n, p));
}

ProbVector ProbVector::Indicator(int n, std::span<const Vertex> set) {
  std::vector<double> p(n, 0.0);
  for (Vertex v : set) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "indicator vertex out of range");
    }
    p[v] = 1.0;
  }
  return ProbVector(std::move(p));
}

double EvalF(const Graph& g, const ProbVector& p, RestraintKind kind) {
  return EvalF(g, Dist2Graph(g), p, kind);
}

double EvalF(const Graph& g, const Graph& dist2, const ProbVector& p,
             RestraintKind kind) {
  const int n = g.order();
  if (p.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "probability vector has " + std::to_string(p.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<double> q(n, 1.0);  // prod over N2(i) of (1 - p_j)
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : dist2.neighbors(i)) q[i] *= 1.0 - p[j];
  }
  const Graph& outer = kind == RestraintKind::kRh ? g : dist2;
  double picked = 0, unreached = 0, stranded = 0;
  for (Vertex i = 0; i < n; ++i) {
    const double out = 1.0 - p[i];
    picked += p[i];
    unreached += out * q[i];
    double covered = 1.0;
    for (Vertex j : outer.neighbors(i)) covered *= p[j] + (1.0 - p[j]) * q[j];
    stranded += out * (1.0 - out * q[i]) * covered;
  }
  return picked + unreached + stranded;
}

namespace {

struct Construction {
  std::vector<char> in_x, in_z, in_y;
};

Construction Construct(const Graph& g, const Graph& dist2,
                       std::span<const char> in_x, RestraintKind kind) {
  const int n = g.order();
  Construction c{{in_x.begin(), in_x.end()},
                 std::vector<char>(n, 0),
                 std::vector<char>(n, 0)};
  for (Vertex i = 0; i < n; ++i) {
    if (c.in_x[i]) continue;
    bool hit = false;
    for (Vertex j : dist2.neighbors(i)) hit |= c.in_x[j] != 0;
    c.in_z[i] = !hit;
  }
  const Graph& outer = kind == RestraintKind::kRh ? g : dist2;
  for (Vertex i = 0; i < n; ++i) {
    if (c.in_x[i] || c.in_z[i]) continue;
    bool inside = true;
    for (Vertex j : outer.neighbors(i)) inside &= c.in_x[j] || c.in_z[j];
    c.in_y[i] = inside;
  }
  return c;
}

std::vector<char> DrawX(const ProbVector& p, Rng& rng) {
  std::vector<char> in_x(p.size());
  for (int i = 0; i < p.size(); ++i) in_x[i] = rng.Bernoulli(p[i]);
  return in_x;
}

}  // namespace

RandomSetTrace RandomRestrainedSet(const Graph& g, const ProbVector& p,
                                   uint64_t seed, RestraintKind kind) {
  if (p.size() != g.order()) {
    throw Error(ErrorCode::kDimensionMismatch, "probability vector size");
  }
  Rng rng(seed);
  const Construction c = Construct(g, Dist2Graph(g), DrawX(p, rng), kind);
  RandomSetTrace trace;
  trace.seed = seed;
  trace.p.assign(p.values().begin(), p.values().end());
  for (Vertex i = 0; i < g.order(); ++i) {
    if (c.in_x[i]) trace.x.push_back(i);
    if (c.in_z[i]) trace.z.push_back(i);
    if (c.in_y[i]) trace.y.push_back(i);
    if (c.in_x[i] || c.in_z[i] || c.in_y[i]) trace.d.push_back(i);
  }
  return trace;
}

ExpectedSizeResult ExpectedSizeCheck(const Graph& g, const ProbVector& p,
                                     RestraintKind kind, int64_t samples,
                                     uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::kBadParams, "samples must be >= 1");
  if (p.size() != g.order()) {
    throw Error(ErrorCode::kDimensionMismatch, "probability vector size");
  }
  const Graph dist2 = Dist2Graph(g);
  const DistanceMatrix dist = AllPairsDistance(g);
  const SetKind target = TargetKind(kind);

  ExpectedSizeResult result;
  result.samples = samples;
  result.f_value = EvalF(g, dist2, p, kind);
  // Welford accumulation keeps the variance stable at 1e5+ samples.
  double mean = 0, m2 = 0;
  std::vector<Vertex> d;
  for (int64_t t = 0; t < samples; ++t) {
    Rng rng = Rng::Substream(seed, static_cast<uint64_t>(t));
    const Construction c = Construct(g, dist2, DrawX(p, rng), kind);
    d.clear();
    for (Vertex i = 0; i < g.order(); ++i) {
      if (c.in_x[i] || c.in_z[i] || c.in_y[i]) d.push_back(i);
    }
    if (!CheckSet(g, dist, d, target)) ++result.predicate_failures;
    const double size = static_cast<double>(d.size());
    const double delta = size - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (size - mean);
  }
  result.mean = mean;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    result.std_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return result;
}

namespace {

// Minimises f along coordinate i on a grid, then refines the best grid cell
// by golden-section search. Returns the new f value (p[i] updated in place
// only if it improves on `current`).
double DescendCoordinate(const Graph& g, const Graph& dist2,
                         std::vector<double>& p, int i, double current,
                         RestraintKind kind) {
  constexpr int kGrid = 16;
  const double original = p[i];
  auto f_at = [&](double t) {
    p[i] = t;
    return EvalF(g, dist2, ProbVector(p), kind);
  };
  double best_t = original, best = current;
  int best_k = -1;
  for (int k = 0; k <= kGrid; ++k) {
    const double t = static_cast<double>(k) / kGrid;
    const double v = f_at(t);
    if (v < best) {
      best = v;
      best_t = t;
      best_k = k;
    }
  }
  if (best_k >= 0) {
    double lo = std::max(0.0, (best_k - 1.0) / kGrid);
    double hi = std::min(1.0, (best_k + 1.0) / kGrid);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
    double fa = f_at(a), fb = f_at(b);
    for (int it = 0; it < 40; ++it) {
      if (fa < fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - ratio * (hi - lo);
        fa = f_at(a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + ratio * (hi - lo);
        fb = f_at(b);
      }
    }
    if (fa < best) {
      best = fa;
      best_t = a;
    }
    if (fb < best) {
      best = fb;
      best_t = b;
    }
  }
  p[i] = best_t;
  return best;
}

}  // namespace

MinimizeResult MinimizeF(const Graph& g, RestraintKind kind,
                         const MinimizeOptions& options) {
  const int n = g.order();
  const Graph dist2 = Dist2Graph(g);

  if (options.mode == MinimizeMode::kBinaryExhaustive) {
    const int limit = std::min(options.oracle.max_vertices, kOracleHardLimit);
    if (n > limit) {
      throw Error(ErrorCode::kOracleLimitExceeded,
                  "binary enumeration limited to n <= " + std::to_string(limit));
    }
    std::vector<double> p(n);
    std::vector<double> best_p;
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? 1.0 : 0.0;
      const double v = EvalF(g, dist2, ProbVector(p), kind);
      if (v < best) {
        best = v;
        best_p = p;
      }
    }
    return {ProbVector(std::move(best_p)), best};
  }

  if (options.starts < 1) {
    throw Error(ErrorCode::kBadParams, "multistart needs at least one start");
  }
  constexpr int kMaxSweeps = 200;
  constexpr double kTolerance = 1e-12;
  std::optional<MinimizeResult> best;
  for (int s = 0; s < options.starts; ++s) {
    Rng rng = Rng::Substream(options.seed, static_cast<uint64_t>(s));
    std::vector<double> p(n);
    for (double& x : p) x = rng.Uniform01();
    double value = EvalF(g, dist2, ProbVector(p), kind);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      const double before = value;
      for (int i = 0; i < n; ++i) {
        value = DescendCoordinate(g, dist2, p, i, value, kind);
      }
      if (before - value < kTolerance) break;
    }
    // report f exactly at the returned point
    value = EvalF(g, dist2, ProbVector(p), kind);
    if (!best || value < best->value) best = MinimizeResult{ProbVector(p), value};
  }
  return *best;
}

namespace {

// (ln(d+1) + 1) / (d+1)
double HopFactor(int d) {
  return (std::log(static_cast<double>(d) + 1.0) + 1.0) / (d + 1.0);
}

// (ln d + 1) / d, NaN for d = 0
double TotalFactor(int d) {
  if (d <= 0) return std::numeric_limits<double>::quiet_NaN();
  return (std::log(static_cast<double>(d)) + 1.0) / d;
}

}  // namespace

double UniformPBound(const Graph& g, RestraintKind kind) {
  const DegreeProfile profile = ComputeDegreeProfile(g);
  const int dh = profile.delta_h;
  if (dh < 1) {
    throw Error(ErrorCode::kHypothesisViolated,
                "uniform-p bound needs delta_h >= 1");
  }
  const int n = g.order();
  const double bound = 2.0 * n * HopFactor(dh);
  const double p_prime = std::log(dh + 1.0) / (dh + 1.0);
  const double f = EvalF(g, ProbVector::Uniform(n, p_prime), kind);
  if (f > bound + kBoundSlack) {
    throw Error(ErrorCode::kInternal,
                "f at the uniform vector exceeds the uniform-p bound");
  }
  return bound;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kNotApplicable: return "not_applicable";
    case Verdict::kUnknown: return "unknown";
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
  }
  return "?";
}

BoundReport BoundCatalog(const Graph& g, int nu, int nu_h,
                         std::optional<int> gamma_h) {
  const DegreeProfile profile = ComputeDegreeProfile(g);
  BoundReport report;
  report.n = g.order();
  report.delta = profile.delta;
  report.delta_h = profile.delta_h;
  report.nu = nu;
  report.nu_h = nu_h;
  report.gamma_h = gamma_h;

  const double n = report.n;
  const int d = profile.delta;
  const int dh = profile.delta_h;
  const double hop = HopFactor(dh);      // (ln(dh+1)+1)/(dh+1)
  const double total = TotalFactor(dh);  // (ln dh + 1)/dh
  const double log_dh = dh > 0 ? std::log(static_cast<double>(dh))
                               : std::numeric_limits<double>::quiet_NaN();

  const Hypothesis dh_positive{"delta_h >= 1", dh >= 1};
  const Hypothesis nu_covers{"nu >= gamma_h", gamma_h && nu >= *gamma_h};
  const Hypothesis perfect{"perfect matching", 2 * nu == report.n};
  const Hypothesis near_perfect{"near-perfect matching", 2 * nu == report.n - 1};
  const Hypothesis perfect_hop{"perfect hop matching", 2 * nu_h == report.n};
  const Hypothesis near_perfect_hop{"near-perfect hop matching",
                                    2 * nu_h == report.n - 1};
  // Dist(G;2) has no isolated vertex exactly when every hop degree is >= 1.
  const Hypothesis no_isolated{"Dist(G;2) has no isolated vertex", dh >= 1};
  const Hypothesis degree_condition{
      "delta >= 1 and n < delta*delta_h/(ln delta_h + 1)",
      d >= 1 && dh >= 1 && n < d * static_cast<double>(dh) / (log_dh + 1.0)};
  const Hypothesis hop_degree_condition{
      "n < delta_h^2/(ln delta_h + 1)",
      dh >= 1 && n < static_cast<double>(dh) * dh / (log_dh + 1.0)};

  auto add = [&](std::string id, SetKind parameter, std::string formula,
                 double value, std::vector<Hypothesis> hypotheses) {
    BoundEntry e;
    e.id = std::move(id);
    e.parameter = parameter;
    e.formula = std::move(formula);
    e.value = value;
    e.hypotheses = std::move(hypotheses);
    e.applicable = std::isfinite(value);
    for (const Hypothesis& h : e.hypotheses) e.applicable &= h.satisfied;
    e.holds = e.applicable ? Verdict::kUnknown : Verdict::kNotApplicable;
    report.entries.push_back(std::move(e));
  };
  // Only formulas that divide by delta_h need guarding; the hop factor is
  // finite at delta_h = 0 but the entries still require delta_h >= 1.
  auto guarded = [dh](double v) {
    return dh >= 1 ? v : std::numeric_limits<double>::quiet_NaN();
  };

  const double matching_hop = guarded((2 * std::log(dh + 1.0) + dh + 3) / (dh + 1) * n);
  const double matching_total = guarded((2 * log_dh + dh + 2) / dh * n);

  add("hop_domination", SetKind::kHop, "n(ln(dh+1)+1)/(dh+1)",
      guarded(n * hop), {dh_positive});
  add("total_domination", SetKind::kTotalDominating, "n(ln d+1)/d",
      TotalFactor(d) * n, {{"delta >= 1", d >= 1}});
  add("two_step", SetKind::kTwoStep, "n(ln dh+1)/dh", n * total, {dh_positive});

  add("rh_matching", SetKind::kRestrainedHop,
      "(2ln(dh+1)+dh+3)/(dh+1) n - 2nu", matching_hop - 2 * nu,
      {dh_positive, nu_covers});
  add("trh_matching", SetKind::kTotalRestrainedHop,
      "(2ln dh+dh+2)/dh n - 2nu", matching_total - 2 * nu,
      {dh_positive, nu_covers});
  add("rh_perfect_matching", SetKind::kRestrainedHop, "2n(ln(dh+1)+1)/(dh+1)",
      guarded(2 * n * hop), {dh_positive, perfect, nu_covers});
  add("trh_perfect_matching", SetKind::kTotalRestrainedHop, "2n(ln dh+1)/dh",
      2 * n * total, {dh_positive, perfect, nu_covers});
  add("rh_near_perfect_matching", SetKind::kRestrainedHop,
      "2n(ln(dh+1)+1)/(dh+1) + 1", guarded(2 * n * hop + 1),
      {dh_positive, near_perfect, nu_covers});
  add("trh_near_perfect_matching", SetKind::kTotalRestrainedHop,
      "2n(ln dh+1)/dh + 1", 2 * n * total + 1,
      {dh_positive, near_perfect, nu_covers});
  add("rh_uniform", SetKind::kRestrainedHop, "2n(ln(dh+1)+1)/(dh+1)",
      guarded(2 * n * hop), {dh_positive});
  add("rh_degree_condition", SetKind::kRestrainedHop, "n(ln(dh+1)+1)/(dh+1)",
      guarded(n * hop), {dh_positive, degree_condition});
  add("trh_degree_condition", SetKind::kTotalRestrainedHop, "n(ln dh+1)/dh",
      n * total, {dh_positive, degree_condition});

  add("2sr_hop_matching", SetKind::kTwoStepRestrained,
      "(2ln(dh+1)+dh+3)/(dh+1) n - 2nu_h", matching_hop - 2 * nu_h,
      {dh_positive, no_isolated});
  add("t2sr_hop_matching", SetKind::kTotalTwoStepRestrained,
      "(2ln dh+dh+2)/dh n - 2nu_h", matching_total - 2 * nu_h,
      {dh_positive, no_isolated});
  add("2sr_perfect_hop_matching", SetKind::kTwoStepRestrained,
      "2n(ln(dh+1)+1)/(dh+1)", guarded(2 * n * hop), {dh_positive, perfect_hop});
  add("t2sr_perfect_hop_matching", SetKind::kTotalTwoStepRestrained,
      "2n(ln dh+1)/dh", 2 * n * total, {dh_positive, perfect_hop});
  add("2sr_near_perfect_hop_matching", SetKind::kTwoStepRestrained,
      "2n(ln(dh+1)+1)/(dh+1) + 1", guarded(2 * n * hop + 1),
      {dh_positive, near_perfect_hop});
  add("t2sr_near_perfect_hop_matching", SetKind::kTotalTwoStepRestrained,
      "2n(ln dh+1)/dh + 1", 2 * n * total + 1, {dh_positive, near_perfect_hop});
  add("2sr_uniform", SetKind::kTwoStepRestrained, "2n(ln(dh+1)+1)/(dh+1)",
      guarded(2 * n * hop), {dh_positive});
  add("2sr_hop_degree_condition", SetKind::kTwoStepRestrained,
      "n(ln(dh+1)+1)/(dh+1)", guarded(n * hop),
      {dh_positive, hop_degree_condition});
  add("t2sr_hop_degree_condition", SetKind::kTotalTwoStepRestrained,
      "n(ln dh+1)/dh", n * total, {dh_positive, hop_degree_condition});
  return report;
}

void AttachExactValues(BoundReport& report,
                       const std::map<SetKind, ExactValue>& exact) {
  for (BoundEntry& e : report.entries) {
    auto it = exact.find(e.parameter);
    e.exact = it == exact.end() ? ExactValue{} : it->second;
    if (!e.applicable || e.exact.state == ExactValue::State::kInfeasible) {
      e.holds = Verdict::kNotApplicable;
    } else if (e.exact.state == ExactValue::State::kUnknown) {
      e.holds = Verdict::kUnknown;
    } else {
      e.holds = e.exact.value <= e.value + kBoundSlack ? Verdict::kHolds
                                                       : Verdict::kViolated;
    }
  }
}

int CountViolations(const BoundReport& report) {
  return static_cast<int>(std::count_if(
      report.entries.begin(), report.entries.end(),
      [](const BoundEntry& e) { return e.holds == Verdict::kViolated; }));
}

std::vector<IdentityCheck> CheckDistanceTwoIdentities(
    const Graph& g, const OracleConfig& config) {
  const Graph dist2 = Dist2Graph(g);
  auto exact = [&](const Graph& h, SetKind kind) {
    const OptResult r = BruteForceMin(h, kind, config);
    return r.status == OptStatus::kOptimal ? ExactValue::Optimal(r.value)
                                           : ExactValue::Infeasible();
  };
  std::vector<IdentityCheck> out;
  for (auto [id, lhs_kind, rhs_kind] :
       {std::tuple{"hop_equals_domination_of_dist2", SetKind::kHop,
                   SetKind::kDominating},
        std::tuple{"two_step_equals_total_domination_of_dist2",
                   SetKind::kTwoStep, SetKind::kTotalDominating}}) {
    IdentityCheck c{id, exact(g, lhs_kind), exact(dist2, rhs_kind), false};
    c.holds = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hopdom
