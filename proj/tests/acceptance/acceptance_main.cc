// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "cli/report.h"
#include "hopdom/error.h"
#include "hopdom/ip_model.h"
#include "hopdom/ip_solver.h"
#include "hopdom/matching.h"
#include "hopdom/oracle.h"
#include "hopdom/prob_bounds.h"
#include "hopdom/random.h"
#include "support/test_support.h"

namespace hopdom {
namespace {

using testing::NamedGraph;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // printed indented under the verdict line
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

ExactValue ExactOf(const OptResult& r) {
  return r.status == OptStatus::kOptimal ? ExactValue::Optimal(r.value)
                                         : ExactValue::Infeasible();
}

std::vector<NamedGraph> AgreementCorpus() {
  auto corpus = testing::NamedCorpus(10);
  auto random = testing::RandomCorpus(300, 4, 12, {0.2, 0.4, 0.6}, 1);
  corpus.insert(corpus.end(), random.begin(), random.end());
  return corpus;
}

Outcome SolverMatchesOracle() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  int checks = 0, mismatches = 0, exceptions = 0;
  for (const auto& [name, g] : AgreementCorpus()) {
    for (SetKind kind : kProgramKinds) {
      ++checks;
      try {
        const SolveResult ip = Solve(BuildInstance(g, kind));
        const OptResult oracle = BruteForceMin(g, kind);
        const bool agree = ip.status == oracle.status &&
                           (ip.status == OptStatus::kInfeasible || ip.value == oracle.value);
        if (!agree) {
          ++mismatches;
          out.notes.push_back(name + " " + std::string(KindName(kind)) + ": ip " +
                              std::to_string(ip.value) + " oracle " +
                              std::to_string(oracle.value));
        }
      } catch (const std::exception& e) {
        ++exceptions;
        out.notes.push_back(name + " " + std::string(KindName(kind)) + ": " + e.what());
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = mismatches == 0 && exceptions == 0 && seconds < 300;
  out.detail = Format("%d checks, %d mismatches, %d exceptions, %.1f s (limit 300 s)",
                      checks, mismatches, exceptions, seconds);
  return out;
}

Outcome FormulationMatchesDefinition() {
  Outcome out;
  int vectors = 0, mismatches = 0;
  for (const auto& [name, g] : testing::RandomCorpus(50, 1, 9, {0.2, 0.4, 0.6}, 2)) {
    const int n = g.order();
    for (SetKind kind : kProgramKinds) {
      const IpInstance inst = BuildInstance(g, kind);
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<int> x(n);
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
        ++vectors;
        if (inst.Satisfies(x) != CheckSet(g, testing::MaskToSet(mask, n), kind)) {
          if (mismatches++ < 5) {
            out.notes.push_back(name + " " + std::string(KindName(kind)) + " mask " +
                                std::to_string(mask));
          }
        }
      }
    }
  }
  out.pass = mismatches == 0;
  out.detail = Format("%d (graph, kind, vector) triples, %d mismatches", vectors,
                      mismatches);
  return out;
}

Outcome BoundsHold() {
  Outcome out;
  std::map<std::string, std::pair<int, int>> coverage;  // id -> applicable, violated
  int applicable = 0, violations = 0;
  const auto corpus =
      testing::RandomCorpus(500, 3, 12, {0.2, 0.35, 0.5, 0.65, 0.8}, 3);
  for (const auto& [name, g] : corpus) {
    std::map<SetKind, ExactValue> exact;
    for (SetKind kind : kProgramKinds) exact[kind] = ExactOf(BruteForceMin(g, kind));
    exact[SetKind::kTotalDominating] = ExactOf(BruteForceMin(g, SetKind::kTotalDominating));
    const int gamma_h = exact[SetKind::kHop].value;
    BoundReport report = BoundCatalog(g, testing::BruteMatchingNumber(g),
                                      testing::BruteHopMatchingNumber(g), gamma_h);
    AttachExactValues(report, exact);
    for (const BoundEntry& e : report.entries) {
      auto& [app, bad] = coverage[e.id];
      if (e.holds == Verdict::kHolds || e.holds == Verdict::kViolated) {
        ++app;
        ++applicable;
      }
      if (e.holds == Verdict::kViolated) {
        ++bad;
        ++violations;
        out.notes.push_back(name + " " + e.id + Format(": exact %d > bound %.10g",
                                                       e.exact.value, e.value));
      }
    }
  }
  std::string uncovered;
  for (const auto& [id, counts] : coverage) {
    if (counts.first == 0) uncovered += (uncovered.empty() ? "" : ", ") + id;
  }
  if (!uncovered.empty()) {
    out.notes.push_back("entries whose hypotheses never held on this corpus: " + uncovered);
  }
  out.pass = violations == 0;
  out.detail = Format("%zu graphs, %d applicable checks, %d violations", corpus.size(),
                      applicable, violations);
  return out;
}

Outcome BinaryMinimumEqualsOptimum() {
  Outcome out;
  int graphs = 0, mismatches = 0;
  for (int t = 0; graphs < 50; ++t) {
    const int n = 4 + t % 7;
    const double p = 0.2 + 0.1 * (t % 5);
    const Graph g = GnpGraph(n, p, 4000 + t);
    if (ComputeDegreeProfile(g).delta_h < 1) continue;
    ++graphs;
    for (RestraintKind kind : {RestraintKind::kRh, RestraintKind::k2sr}) {
      const OptResult opt = BruteForceMin(g, TargetKind(kind));
      const double value = MinimizeF(g, kind).value;
      const bool integral = std::abs(value - std::round(value)) < 1e-9;
      if (opt.status != OptStatus::kOptimal || !integral ||
          std::lround(value) != opt.value) {
        ++mismatches;
        out.notes.push_back(Format("gnp(%d,%.1f,seed=%d) %s: min f %.10g, gamma %d", n,
                                   p, 4000 + t,
                                   std::string(RestraintKindName(kind)).c_str(), value,
                                   opt.value));
      }
    }
  }
  out.pass = mismatches == 0;
  out.detail = Format("%d graphs x 2 kinds, %d mismatches", graphs, mismatches);
  return out;
}

Outcome ExpectationIdentity() {
  Outcome out;
  constexpr int kPairs = 20;
  constexpr int64_t kSamples = 100'000;
  int within = 0;
  int64_t failures = 0, trials = 0;
  Rng pick(5);
  for (int t = 0; t < kPairs; ++t) {
    Graph g;
    std::string name;
    if (t == 0) {
      g = CycleGraph(5);
      name = "C5";
    } else {
      do {
        const int n = 5 + static_cast<int>(pick.Next() % 6);
        const uint64_t seed = pick.Next();
        g = GnpGraph(n, 0.3 + 0.1 * (t % 4), seed);
        name = Format("gnp(%d,%.1f,seed=%llu)", n, 0.3 + 0.1 * (t % 4),
                      static_cast<unsigned long long>(seed));
      } while (ComputeDegreeProfile(g).delta_h < 1);
    }
    const RestraintKind kind = t % 2 == 0 ? RestraintKind::kRh : RestraintKind::k2sr;
    std::vector<double> pv(g.order());
    for (double& x : pv) x = t == 0 ? 0.3 : 0.15 + 0.7 * pick.Uniform01();
    const ProbVector p(pv);

    const ExpectedSizeResult r = ExpectedSizeCheck(g, p, kind, kSamples, 100 + t);
    trials += r.samples;
    failures += r.predicate_failures;
    const double z = r.std_error > 0 ? std::abs(r.mean - r.f_value) / r.std_error
                                     : (r.mean == r.f_value ? 0.0 : INFINITY);
    within += z <= 3;
    const double exact = testing::ExactExpectedSize(g, p.values(), kind);
    out.notes.push_back(Format(
        "%-28s %-3s mean %.5f  f %.5f  z %8.2f  exact E|D| %.5f  z(exact) %.2f",
        name.c_str(), std::string(RestraintKindName(kind)).c_str(), r.mean, r.f_value, z,
        exact, r.std_error > 0 ? std::abs(r.mean - exact) / r.std_error : 0.0));
  }
  out.pass = within >= kPairs - 1 && failures == 0;
  out.detail = Format("%d/%d pairs with |mean - f| <= 3 stderr (need >= %d); "
                      "%lld/%lld sampled sets failed the predicate",
                      within, kPairs, kPairs - 1, static_cast<long long>(failures),
                      static_cast<long long>(trials));
  return out;
}

Outcome MatchingsMatchBruteForce() {
  Outcome out;
  int graphs = 0, mismatches = 0;
  auto corpus = AgreementCorpus();
  auto extra = testing::RandomCorpus(200, 1, 12, {0.1, 0.3, 0.5, 0.7, 0.9}, 6);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (const auto& [name, g] : corpus) {
    if (g.order() > 12) continue;
    ++graphs;
    const int nu = MaxMatching(g).size, nu_bf = testing::BruteMatchingNumber(g);
    const int nh = HopMatching(g).size, nh_bf = testing::BruteHopMatchingNumber(g);
    if (nu != nu_bf || nh != nh_bf) {
      ++mismatches;
      out.notes.push_back(name + Format(": nu %d/%d, nu_h %d/%d", nu, nu_bf, nh, nh_bf));
    }
  }
  out.pass = mismatches == 0;
  out.detail = Format("%d graphs, %d mismatches", graphs, mismatches);
  return out;
}

Outcome SpotChecks() {
  Outcome out;
  auto check = [&](const std::string& what, bool ok) {
    out.notes.push_back((ok ? "ok   " : "FAIL ") + what);
    out.pass &= ok;
  };
  const SolveResult c4 = Solve(BuildInstance(CycleGraph(4), SetKind::kHop));
  check("gamma_h(C4) = 2", c4.status == OptStatus::kOptimal && c4.value == 2 &&
                               BruteForceMin(CycleGraph(4), SetKind::kHop).value == 2);
  const SolveResult p4 = Solve(BuildInstance(PathGraph(4), SetKind::kTwoStep));
  check("gamma_2step(P4) = 4", p4.status == OptStatus::kOptimal && p4.value == 4);
  check("2SDP(K4) infeasible",
        Solve(BuildInstance(CompleteGraph(4), SetKind::kTwoStep)).status ==
                OptStatus::kInfeasible &&
            BruteForceMin(CompleteGraph(4), SetKind::kTwoStep).status ==
                OptStatus::kInfeasible);
  const MatchingResult m = MaxMatching(CycleGraph(5));
  check("nu(C5) = 2, near-perfect",
        m.size == 2 && m.classification == MatchingClass::kNearPerfect);
  const HopMatchingResult h = HopMatching(PathGraph(4));
  check("nu_h(P4) = 2, perfect", h.size == 2 && h.classification == MatchingClass::kPerfect);
  out.detail = "5 known values";
  return out;
}

Outcome VerifyIsDeterministic() {
  Outcome out;
  cli::VerifyOptions opt;
  opt.n_min = 4;
  opt.n_max = 8;
  opt.p_list = {0.3, 0.6};
  opt.trials = 50;
  opt.seed = 42;
  const cli::CommandResult a = cli::Verify(opt);
  const cli::CommandResult b = cli::Verify(opt);
  const std::string sa = cli::Serialize(a.report), sb = cli::Serialize(b.report);
  out.pass = sa == sb;
  out.detail = Format("verify n=4..8 p=0.3,0.6 trials=50 seed=42 twice: %zu bytes, %s; "
                      "exit %d, %d violations",
                      sa.size(), sa == sb ? "identical" : "DIFFERENT", a.exit_code,
                      a.report["summary"]["violations"].get<int>());
  return out;
}

}  // namespace
}  // namespace hopdom

int main() {
  using namespace hopdom;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 solver = exhaustive oracle", SolverMatchesOracle},
      {"AC2 formulation <=> definition", FormulationMatchesDefinition},
      {"AC3 upper bounds hold", BoundsHold},
      {"AC4 binary min of f = optimum", BinaryMinimumEqualsOptimum},
      {"AC5 Monte Carlo mean = f", ExpectationIdentity},
      {"AC6 matchings vs brute force", MatchingsMatchBruteForce},
      {"AC7 known-value spot checks", SpotChecks},
      {"AC8 verify determinism", VerifyIsDeterministic},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", label, o.detail.c_str());
    for (const std::string& note : o.notes) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
