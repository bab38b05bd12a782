#include "hopdom/graph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hopdom/error.h"
#include "hopdom/random.h"

namespace hopdom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kOracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::kNodeLimitExceeded: return "NodeLimitExceeded";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph BuildGraph(int n, std::span<const Edge> edge_list) {
  if (n < 1) {
    throw Error(ErrorCode::kBadParams, "graph needs at least one vertex");
  }
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

std::string Fingerprint::ToString() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "n%d-m%d-%016llx", n, m,
                static_cast<unsigned long long>(edge_hash));
  return buf;
}

Fingerprint FingerprintOf(const Graph& g) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint32_t word) {
    for (int b = 0; b < 4; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<uint32_t>(g.order()));
  for (auto [u, v] : g.edges()) {
    mix(static_cast<uint32_t>(u));
    mix(static_cast<uint32_t>(v));
  }
  return {g.order(), g.size(), h};
}

DistanceMatrix AllPairsDistance(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    size_t head = 0, tail = 0;
    queue[tail++] = s;
    dist.set(s, s, 0);
    while (head < tail) {
      const Vertex u = queue[head++];
      const int du = dist.at(s, u);
      for (Vertex v : g.neighbors(u)) {
        if (!dist.reachable(s, v)) {
          dist.set(s, v, du + 1);
          queue[tail++] = v;
        }
      }
    }
  }
  return dist;
}

Graph Dist2Graph(const Graph& g) { return Dist2Graph(g, AllPairsDistance(g)); }

Graph Dist2Graph(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist.at_distance_two(u, v)) edges.emplace_back(u, v);
    }
  }
  return BuildGraph(n, edges);
}

DegreeProfile ComputeDegreeProfile(const Graph& g) {
  return ComputeDegreeProfile(g, AllPairsDistance(g));
}

DegreeProfile ComputeDegreeProfile(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.order();
  DegreeProfile profile;
  profile.deg.resize(n);
  profile.hopdeg.assign(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    profile.deg[i] = g.degree(i);
    for (Vertex j = 0; j < n; ++j) {
      if (dist.at_distance_two(i, j)) ++profile.hopdeg[i];
    }
  }
  profile.delta = *std::min_element(profile.deg.begin(), profile.deg.end());
  profile.delta_h =
      *std::min_element(profile.hopdeg.begin(), profile.hopdeg.end());
  return profile;
}

namespace {

void RequireOrder(int n, int minimum, std::string_view family) {
  if (n < minimum) {
    throw Error(ErrorCode::kBadParams,
                std::string(family) + " needs n >= " + std::to_string(minimum));
  }
}

}  // namespace

Graph PathGraph(int n) {
  RequireOrder(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return BuildGraph(n, edges);
}

Graph CycleGraph(int n) {
  RequireOrder(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return BuildGraph(n, edges);
}

Graph CompleteGraph(int n) {
  RequireOrder(n, 1, "complete");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return BuildGraph(n, edges);
}

Graph CompleteBipartiteGraph(int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::kBadParams, "complete_bipartite needs a, b >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return BuildGraph(a + b, edges);
}

Graph PetersenGraph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return BuildGraph(10, edges);
}

Graph StarGraph(int leaves) {
  RequireOrder(leaves, 1, "star");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return BuildGraph(leaves + 1, edges);
}

Graph GnpGraph(int n, double p, uint64_t seed) {
  RequireOrder(n, 1, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kBadParams, "gnp needs 0 <= p <= 1");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return BuildGraph(n, edges);
}

namespace {

int IntParam(std::span<const double> params, size_t index,
             std::string_view family) {
  if (index >= params.size()) {
    throw Error(ErrorCode::kBadParams,
                std::string(family) + ": missing parameter " +
                    std::to_string(index + 1));
  }
  const double x = params[index];
  if (x != std::floor(x) || x < 0 || x > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kBadParams,
                std::string(family) + ": parameter must be a whole number");
  }
  return static_cast<int>(x);
}

void RequireArity(std::span<const double> params, size_t arity,
                  std::string_view family) {
  if (params.size() != arity) {
    throw Error(ErrorCode::kBadParams,
                std::string(family) + " takes " + std::to_string(arity) +
                    " parameter(s)");
  }
}

}  // namespace

Graph Generate(std::string_view family, std::span<const double> params,
               uint64_t seed) {
  if (family == "path") {
    RequireArity(params, 1, family);
    return PathGraph(IntParam(params, 0, family));
  }
  if (family == "cycle") {
    RequireArity(params, 1, family);
    return CycleGraph(IntParam(params, 0, family));
  }
  if (family == "complete") {
    RequireArity(params, 1, family);
    return CompleteGraph(IntParam(params, 0, family));
  }
  if (family == "complete_bipartite") {
    RequireArity(params, 2, family);
    return CompleteBipartiteGraph(IntParam(params, 0, family),
                                  IntParam(params, 1, family));
  }
  if (family == "petersen") {
    RequireArity(params, 0, family);
    return PetersenGraph();
  }
  if (family == "star") {
    RequireArity(params, 1, family);
    return StarGraph(IntParam(params, 0, family));
  }
  if (family == "gnp") {
    RequireArity(params, 2, family);
    return GnpGraph(IntParam(params, 0, family), params[1], seed);
  }
  throw Error(ErrorCode::kBadParams,
              "unknown family '" + std::string(family) + "'");
}

}  // namespace hopdom
