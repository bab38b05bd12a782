#ifndef HOPDOM_GRAPH_H_
#define HOPDOM_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; the
// only way to obtain one is BuildGraph (or the generators, which call it).
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  friend Graph BuildGraph(int n, std::span<const Edge> edge_list);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// Validates and builds. Throws Error with kSelfLoop, kDuplicateEdge or
// kVertexOutOfRange; n must be at least 1 (kBadParams otherwise).
Graph BuildGraph(int n, std::span<const Edge> edge_list);

// (n, m, FNV-1a over the sorted edge list). Binds reports to inputs.
struct Fingerprint {
  int n = 0;
  int m = 0;
  uint64_t edge_hash = 0;

  std::string ToString() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint FingerprintOf(const Graph& g);

inline constexpr int kUnreachable = -1;

// Hop counts between every ordered pair; kUnreachable marks pairs in
// different components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), data_(size_t(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int at(Vertex i, Vertex j) const { return data_[size_t(i) * n_ + j]; }
  bool reachable(Vertex i, Vertex j) const { return at(i, j) != kUnreachable; }
  bool at_distance_two(Vertex i, Vertex j) const { return at(i, j) == 2; }

  void set(Vertex i, Vertex j, int d) { data_[size_t(i) * n_ + j] = d; }

 private:
  int n_ = 0;
  std::vector<int> data_;
};

// One BFS per source.
DistanceMatrix AllPairsDistance(const Graph& g);

// Dist(G;2): same vertex set, u~v iff d_G(u,v) = 2.
Graph Dist2Graph(const Graph& g);
Graph Dist2Graph(const Graph& g, const DistanceMatrix& dist);

struct DegreeProfile {
  std::vector<int> deg;
  std::vector<int> hopdeg;
  int delta = 0;
  int delta_h = 0;
};

DegreeProfile ComputeDegreeProfile(const Graph& g);
DegreeProfile ComputeDegreeProfile(const Graph& g, const DistanceMatrix& dist);

// Named families for corpora and the `gen` command.
Graph PathGraph(int n);
Graph CycleGraph(int n);  // n >= 3
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int a, int b);
Graph PetersenGraph();
Graph StarGraph(int leaves);
// G(n, p): every pair {u,v}, u < v in lexicographic order, is kept when one
// uniform draw from Rng(seed) falls below p.
Graph GnpGraph(int n, double p, uint64_t seed);

// Dispatch by family name: path, cycle, complete, complete_bipartite,
// petersen, star, gnp. Throws kBadParams on unknown family or bad params.
Graph Generate(std::string_view family, std::span<const double> params,
               uint64_t seed);

}  // namespace hopdom

#endif  // HOPDOM_GRAPH_H_
