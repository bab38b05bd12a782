#ifndef HOPDOM_MATCHING_H_
#define HOPDOM_MATCHING_H_

#include <string_view>
#include <vector>

#include "hopdom/graph.h"

namespace hopdom {

enum class MatchingClass { kPerfect, kNearPerfect, kNeither };

std::string_view MatchingClassName(MatchingClass c);

// Perfect when 2*size == n, near-perfect when 2*size == n - 1.
MatchingClass ClassifyMatching(int n, int size);

struct MatchingResult {
  int size = 0;
  std::vector<Edge> pairs;  // (u, v) with u < v, sorted
  MatchingClass classification = MatchingClass::kNeither;
};

// A two-edge path u - middle - v; end vertices satisfy d(u, v) = 2.
struct HopPath {
  Vertex u;
  Vertex middle;
  Vertex v;
  friend bool operator==(const HopPath&, const HopPath&) = default;
};

struct HopMatchingResult {
  int size = 0;
  std::vector<HopPath> paths;  // end pairs disjoint; middles may repeat
  MatchingClass classification = MatchingClass::kNeither;  // over end vertices
};

// Maximum cardinality matching on a general graph (Edmonds' blossom
// algorithm). The result is re-checked for vertex-disjointness; a failed
// check throws kInternal.
MatchingResult MaxMatching(const Graph& g);

// Maximum hop matching: maximum matching of Dist(G;2), each pair given the
// lowest-indexed common neighbour as its middle vertex.
HopMatchingResult HopMatching(const Graph& g);

}  // namespace hopdom

#endif  // HOPDOM_MATCHING_H_
