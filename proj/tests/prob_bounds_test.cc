#include "hopdom/prob_bounds.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "hopdom/error.h"
#include "hopdom/matching.h"
#include "support/test_support.h"

namespace hopdom {
namespace {

constexpr RestraintKind kBothKinds[] = {RestraintKind::kRh, RestraintKind::k2sr};

const BoundEntry& Entry(const BoundReport& r, const std::string& id) {
  auto it = std::find_if(r.entries.begin(), r.entries.end(),
                         [&](const BoundEntry& e) { return e.id == id; });
  if (it == r.entries.end()) throw std::runtime_error("no entry " + id);
  return *it;
}

TEST(ProbVector, Validation) {
  EXPECT_THROW(ProbVector({0.5, 1.5}), Error);
  EXPECT_THROW(ProbVector({std::nan("")}), Error);
  const std::vector<Vertex> s = {1, 3};
  const ProbVector ind = ProbVector::Indicator(4, s);
  EXPECT_EQ(ind[0], 0.0);
  EXPECT_EQ(ind[3], 1.0);
  EXPECT_EQ(ProbVector::Uniform(3, 0.25)[2], 0.25);
}

TEST(EvalF, FrozenValuesOnC5) {
  const Graph c5 = CycleGraph(5);
  const ProbVector p = ProbVector::Uniform(5, 0.3);
  EXPECT_NEAR(EvalF(c5, p, RestraintKind::kRh), 4.1657259755, 1e-9);
  EXPECT_NEAR(EvalF(c5, p, RestraintKind::k2sr), 4.1657259755, 1e-9);
  EXPECT_NEAR(EvalF(c5, ProbVector::Uniform(5, 0.5), RestraintKind::kRh),
              3.9794921875, 1e-12);
}

TEST(EvalF, EndpointsGiveOrder) {
  for (const auto& [name, g] : testing::NamedCorpus(7)) {
    for (RestraintKind k : kBothKinds) {
      EXPECT_NEAR(EvalF(g, ProbVector::Uniform(g.order(), 0.0), k), g.order(), 1e-12);
      EXPECT_NEAR(EvalF(g, ProbVector::Uniform(g.order(), 1.0), k), g.order(), 1e-12);
    }
  }
}

TEST(EvalF, DimensionMismatch) {
  EXPECT_THROW(EvalF(CycleGraph(5), ProbVector::Uniform(4, 0.5), RestraintKind::kRh),
               Error);
}

// At a 0/1 point the construction is deterministic and f counts |D|.
TEST(EvalF, BinaryPointsCountConstructedSet) {
  for (const auto& [name, g] : testing::RandomCorpus(24, 3, 8, {0.3, 0.6}, 21)) {
    const int n = g.order();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      const ProbVector p = ProbVector::Indicator(n, testing::MaskToSet(mask, n));
      for (RestraintKind k : kBothKinds) {
        const double exact = testing::ExactExpectedSize(g, p.values(), k);
        ASSERT_NEAR(EvalF(g, p, k), exact, 1e-9) << name << " mask " << mask;
        ASSERT_EQ(RandomRestrainedSet(g, p, 0, k).d.size(), exact);
      }
    }
  }
}

// The closed form multiplies probabilities of dependent events, so away from
// the vertices of the cube it is not the expectation of |D|.
TEST(EvalF, DiffersFromExpectationAtInteriorPoints) {
  const Graph c5 = CycleGraph(5);
  const ProbVector p = ProbVector::Uniform(5, 0.3);
  const double e_rh = testing::ExactExpectedSize(c5, p.values(), RestraintKind::kRh);
  const double e_2sr = testing::ExactExpectedSize(c5, p.values(), RestraintKind::k2sr);
  EXPECT_NEAR(e_rh, 3.37565, 1e-9);
  EXPECT_NEAR(e_2sr, 4.559, 1e-9);
  EXPECT_GT(EvalF(c5, p, RestraintKind::kRh) - e_rh, 0.7);
  EXPECT_LT(EvalF(c5, p, RestraintKind::k2sr) - e_2sr, -0.3);
}

// gamma_2sr(P5) = 5, yet f dips below it in the interior of the cube.
TEST(EvalF, CanFallBelowOptimumInInterior) {
  const Graph p5 = PathGraph(5);
  ASSERT_EQ(BruteForceMin(p5, SetKind::kTwoStepRestrained).value, 5);
  const ProbVector half = ProbVector::Uniform(5, 0.5);
  EXPECT_NEAR(EvalF(p5, half, RestraintKind::k2sr), 4.90234375, 1e-12);
  EXPECT_NEAR(testing::ExactExpectedSize(p5, half.values(), RestraintKind::k2sr),
              5.0, 1e-12);
}

TEST(RandomRestrainedSet, ProducesTargetSets) {
  for (const auto& [name, g] : testing::RandomCorpus(30, 4, 11, {0.25, 0.5}, 4)) {
    for (RestraintKind k : kBothKinds) {
      for (double q : {0.1, 0.4, 0.8}) {
        const ProbVector p = ProbVector::Uniform(g.order(), q);
        for (uint64_t seed = 0; seed < 20; ++seed) {
          const RandomSetTrace t = RandomRestrainedSet(g, p, seed, k);
          ASSERT_TRUE(CheckSet(g, t.d, TargetKind(k))) << name << " seed " << seed;
          std::set<Vertex> all(t.x.begin(), t.x.end());
          all.insert(t.z.begin(), t.z.end());
          all.insert(t.y.begin(), t.y.end());
          EXPECT_EQ(all.size(), t.x.size() + t.z.size() + t.y.size());
          EXPECT_EQ(std::vector<Vertex>(all.begin(), all.end()), t.d);
        }
      }
    }
  }
}

TEST(RandomRestrainedSet, Deterministic) {
  const Graph g = PetersenGraph();
  const ProbVector p = ProbVector::Uniform(10, 0.3);
  EXPECT_EQ(RandomRestrainedSet(g, p, 77, RestraintKind::kRh).d,
            RandomRestrainedSet(g, p, 77, RestraintKind::kRh).d);
}

TEST(ExpectedSizeCheck, TracksTrueExpectation) {
  const Graph c5 = CycleGraph(5);
  const ProbVector p = ProbVector::Uniform(5, 0.3);
  const ExpectedSizeResult r = ExpectedSizeCheck(c5, p, RestraintKind::kRh, 40000, 9);
  EXPECT_EQ(r.samples, 40000);
  EXPECT_EQ(r.predicate_failures, 0);
  EXPECT_NEAR(r.f_value, 4.1657259755, 1e-9);
  EXPECT_LT(std::abs(r.mean - 3.37565), 4 * r.std_error);
  const ExpectedSizeResult again = ExpectedSizeCheck(c5, p, RestraintKind::kRh, 40000, 9);
  EXPECT_EQ(r.mean, again.mean);
}

TEST(ExpectedSizeCheck, EdgeCases) {
  const Graph g = CycleGraph(6);
  const ExpectedSizeResult one =
      ExpectedSizeCheck(g, ProbVector::Uniform(6, 1.0), RestraintKind::k2sr, 50, 1);
  EXPECT_EQ(one.mean, 6);
  EXPECT_EQ(one.std_error, 0);
  EXPECT_EQ(ExpectedSizeCheck(g, ProbVector::Uniform(6, 0.0), RestraintKind::kRh, 50, 1).mean,
            6);
  EXPECT_THROW(ExpectedSizeCheck(g, ProbVector::Uniform(6, 0.5), RestraintKind::kRh, 0, 1),
               Error);
}

TEST(MinimizeF, BinaryMinimumIsOptimum) {
  auto corpus = testing::RandomCorpus(20, 4, 9, {0.3, 0.5}, 8);
  corpus.push_back({"C5", CycleGraph(5)});
  corpus.push_back({"P5", PathGraph(5)});
  for (const auto& [name, g] : corpus) {
    for (RestraintKind k : kBothKinds) {
      const OptResult opt = BruteForceMin(g, TargetKind(k));
      if (opt.status != OptStatus::kOptimal) continue;
      const MinimizeResult m = MinimizeF(g, k);
      EXPECT_NEAR(m.value, opt.value, 1e-9) << name << " " << RestraintKindName(k);
      EXPECT_NEAR(EvalF(g, m.p, k), m.value, 1e-12);
    }
  }
}

TEST(MinimizeF, MultistartReachesInteriorPoint) {
  const Graph p5 = PathGraph(5);
  MinimizeOptions opt;
  opt.mode = MinimizeMode::kMultistartDescent;
  const MinimizeResult m = MinimizeF(p5, RestraintKind::k2sr, opt);
  EXPECT_NEAR(EvalF(p5, m.p, RestraintKind::k2sr), m.value, 1e-12);
  EXPECT_LT(m.value, 4.90234375 + 1e-9);
  const MinimizeResult again = MinimizeF(p5, RestraintKind::k2sr, opt);
  EXPECT_EQ(m.value, again.value);
}

TEST(MinimizeF, BinaryModeHonoursLimit) {
  MinimizeOptions opt;
  opt.oracle.max_vertices = 5;
  EXPECT_THROW(MinimizeF(PathGraph(6), RestraintKind::kRh, opt), Error);
}

TEST(UniformPBound, FrozenValues) {
  EXPECT_NEAR(UniformPBound(CycleGraph(5), RestraintKind::kRh), 6.9953742956, 1e-9);
  EXPECT_NEAR(EvalF(CycleGraph(5), ProbVector::Uniform(5, std::log(3.0) / 3),
                    RestraintKind::kRh),
              4.0143507468, 1e-9);
  // C10 has delta_h = 2.
  EXPECT_NEAR(UniformPBound(CycleGraph(10), RestraintKind::k2sr),
              20 * (std::log(3.0) + 1) / 3, 1e-12);
  try {
    UniformPBound(CompleteGraph(4), RestraintKind::kRh);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
  }
}

TEST(BoundCatalog, C8TwoStep) {
  BoundReport r = BoundCatalog(CycleGraph(8), 4, 4, 4);
  EXPECT_EQ(r.entries.size(), 21u);
  AttachExactValues(r, {{SetKind::kTwoStep, ExactValue::Optimal(4)}});
  const BoundEntry& e = Entry(r, "two_step");
  EXPECT_NEAR(e.value, 6.7725887222, 1e-9);
  EXPECT_EQ(e.holds, Verdict::kHolds);
  EXPECT_EQ(Entry(r, "rh_uniform").holds, Verdict::kUnknown);
}

TEST(BoundCatalog, CompleteGraphHasNoHopEntries) {
  BoundReport r = BoundCatalog(CompleteGraph(4), 2, 0, 4);
  for (const BoundEntry& e : r.entries) {
    if (e.id == "total_domination") {
      EXPECT_TRUE(e.applicable);
    } else {
      EXPECT_FALSE(e.applicable) << e.id;
    }
  }
  AttachExactValues(r, {{SetKind::kTotalDominating, ExactValue::Optimal(2)}});
  EXPECT_EQ(CountViolations(r), 0);
  EXPECT_EQ(Entry(r, "total_domination").holds, Verdict::kHolds);
}

TEST(BoundCatalog, PathP4PerfectHopMatching) {
  const Graph p4 = PathGraph(4);
  const BoundReport r = BoundCatalog(p4, MaxMatching(p4).size, HopMatching(p4).size,
                                     BruteForceMin(p4, SetKind::kHop).value);
  EXPECT_TRUE(Entry(r, "2sr_perfect_hop_matching").applicable);
  EXPECT_TRUE(Entry(r, "t2sr_perfect_hop_matching").applicable);
  EXPECT_FALSE(Entry(r, "2sr_near_perfect_hop_matching").applicable);
  // nu(P4) = 2 >= gamma_h(P4) = 2 and the matching is perfect.
  EXPECT_TRUE(Entry(r, "rh_perfect_matching").applicable);
  EXPECT_FALSE(BoundCatalog(p4, 2, 2, std::nullopt).entries[3].applicable);
}

TEST(BoundCatalog, DetectsViolation) {
  BoundReport r = BoundCatalog(CycleGraph(8), 4, 4, 4);
  AttachExactValues(r, {{SetKind::kTwoStep, ExactValue::Optimal(7)},
                        {SetKind::kTotalRestrainedHop, ExactValue::Infeasible()}});
  EXPECT_EQ(Entry(r, "two_step").holds, Verdict::kViolated);
  EXPECT_EQ(Entry(r, "trh_degree_condition").holds, Verdict::kNotApplicable);
  EXPECT_EQ(CountViolations(r), 1);
}

TEST(DistanceTwoIdentities, HoldOnCorpus) {
  auto corpus = testing::NamedCorpus(8);
  auto random = testing::RandomCorpus(30, 3, 10, {0.3, 0.6}, 13);
  corpus.insert(corpus.end(), random.begin(), random.end());
  for (const auto& [name, g] : corpus) {
    for (const IdentityCheck& c : CheckDistanceTwoIdentities(g)) {
      EXPECT_TRUE(c.holds) << name << " " << c.id;
      EXPECT_EQ(c.lhs, c.rhs) << name << " " << c.id;
    }
  }
}

}  // namespace
}  // namespace hopdom
