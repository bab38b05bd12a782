#include "hopdom/matching.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "support/test_support.h"

namespace hopdom {
namespace {

void ExpectValidMatching(const Graph& g, const MatchingResult& m) {
  std::set<Vertex> used;
  EXPECT_EQ(static_cast<int>(m.pairs.size()), m.size);
  for (auto [u, v] : m.pairs) {
    EXPECT_LT(u, v);
    EXPECT_TRUE(g.adjacent(u, v));
    EXPECT_TRUE(used.insert(u).second);
    EXPECT_TRUE(used.insert(v).second);
  }
}

void ExpectValidHopMatching(const Graph& g, const HopMatchingResult& m) {
  std::set<Vertex> ends;
  EXPECT_EQ(static_cast<int>(m.paths.size()), m.size);
  for (const HopPath& p : m.paths) {
    EXPECT_TRUE(g.adjacent(p.u, p.middle));
    EXPECT_TRUE(g.adjacent(p.middle, p.v));
    EXPECT_FALSE(g.adjacent(p.u, p.v));
    EXPECT_NE(p.u, p.v);
    EXPECT_TRUE(ends.insert(p.u).second);
    EXPECT_TRUE(ends.insert(p.v).second);
  }
}

TEST(Classify, Thresholds) {
  EXPECT_EQ(ClassifyMatching(6, 3), MatchingClass::kPerfect);
  EXPECT_EQ(ClassifyMatching(7, 3), MatchingClass::kNearPerfect);
  EXPECT_EQ(ClassifyMatching(7, 2), MatchingClass::kNeither);
  EXPECT_EQ(ClassifyMatching(1, 0), MatchingClass::kNearPerfect);
  EXPECT_EQ(MatchingClassName(MatchingClass::kNearPerfect), "near_perfect");
}

TEST(MaxMatching, KnownGraphs) {
  const MatchingResult c5 = MaxMatching(CycleGraph(5));
  EXPECT_EQ(c5.size, 2);
  EXPECT_EQ(c5.classification, MatchingClass::kNearPerfect);
  EXPECT_EQ(MaxMatching(PetersenGraph()).size, 5);
  EXPECT_EQ(MaxMatching(StarGraph(5)).size, 1);
  EXPECT_EQ(MaxMatching(CompleteBipartiteGraph(3, 5)).size, 3);
  EXPECT_EQ(MaxMatching(PathGraph(1)).size, 0);
}

// Two triangles joined by a path: the greedy start can block augmentation
// unless blossoms are contracted.
TEST(MaxMatching, NeedsBlossomContraction) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3},
                                   {3, 4}, {4, 5}, {5, 6}, {6, 4}, {0, 7}};
  const Graph g = BuildGraph(8, edges);
  const MatchingResult m = MaxMatching(g);
  EXPECT_EQ(m.size, 4);
  ExpectValidMatching(g, m);
}

TEST(HopMatching, KnownGraphs) {
  const HopMatchingResult p4 = HopMatching(PathGraph(4));
  EXPECT_EQ(p4.size, 2);
  EXPECT_EQ(p4.classification, MatchingClass::kPerfect);
  EXPECT_EQ(p4.paths[0], (HopPath{0, 1, 2}));
  EXPECT_EQ(p4.paths[1], (HopPath{1, 2, 3}));
  EXPECT_EQ(HopMatching(CompleteGraph(5)).size, 0);
  EXPECT_EQ(HopMatching(CycleGraph(4)).size, 2);
  EXPECT_EQ(HopMatching(PetersenGraph()).size, 5);
}

TEST(Matchings, AgreeWithBruteForce) {
  auto corpus = testing::NamedCorpus(9);
  auto random = testing::RandomCorpus(80, 2, 11, {0.2, 0.35, 0.5, 0.8}, 11);
  corpus.insert(corpus.end(), random.begin(), random.end());
  for (const auto& [name, g] : corpus) {
    const MatchingResult m = MaxMatching(g);
    const HopMatchingResult h = HopMatching(g);
    EXPECT_EQ(m.size, testing::BruteMatchingNumber(g)) << name;
    EXPECT_EQ(h.size, testing::BruteHopMatchingNumber(g)) << name;
    ExpectValidMatching(g, m);
    ExpectValidHopMatching(g, h);
    EXPECT_EQ(m.classification, ClassifyMatching(g.order(), m.size));
  }
}

}  // namespace
}  // namespace hopdom
