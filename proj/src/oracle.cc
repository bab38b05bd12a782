#include "hopdom/oracle.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "hopdom/error.h"

namespace hopdom {

std::string_view KindName(SetKind kind) {
  switch (kind) {
    case SetKind::kDominating: return "dom";
    case SetKind::kTotalDominating: return "tdom";
    case SetKind::kHop: return "hop";
    case SetKind::kTwoStep: return "2step";
    case SetKind::kRestrainedHop: return "rh";
    case SetKind::kTotalRestrainedHop: return "trh";
    case SetKind::kTwoStepRestrained: return "2sr";
    case SetKind::kTotalTwoStepRestrained: return "t2sr";
  }
  return "?";
}

std::optional<SetKind> KindFromName(std::string_view name) {
  for (SetKind kind : kAllKinds) {
    if (KindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view StatusName(OptStatus status) {
  return status == OptStatus::kOptimal ? "optimal" : "infeasible";
}

bool CheckSet(const Graph& g, std::span<const Vertex> s, SetKind kind) {
  return CheckSet(g, AllPairsDistance(g), s, kind);
}

bool CheckSet(const Graph& g, const DistanceMatrix& dist,
              std::span<const Vertex> s, SetKind kind) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph");
    }
    in[v] = 1;
  }

  auto exists = [&](Vertex u, auto&& pred) {
    for (Vertex v = 0; v < n; ++v) {
      if (pred(u, v)) return true;
    }
    return false;
  };
  auto in_s_at = [&](int d) {
    return [&, d](Vertex u, Vertex v) { return in[v] && dist.at(u, v) == d; };
  };
  auto out_s_at = [&](int d) {
    return [&, d](Vertex u, Vertex v) { return !in[v] && dist.at(u, v) == d; };
  };

  // base: which vertices need a partner in S, and at what distance
  int base_distance = 2;
  bool base_total = false;
  int restraint_distance = 0;  // 0: no restraint clause
  switch (kind) {
    case SetKind::kDominating: base_distance = 1; break;
    case SetKind::kTotalDominating: base_distance = 1; base_total = true; break;
    case SetKind::kHop: break;
    case SetKind::kTwoStep: base_total = true; break;
    case SetKind::kRestrainedHop: restraint_distance = 1; break;
    case SetKind::kTotalRestrainedHop:
      base_total = true;
      restraint_distance = 1;
      break;
    case SetKind::kTwoStepRestrained: restraint_distance = 2; break;
    case SetKind::kTotalTwoStepRestrained:
      base_total = true;
      restraint_distance = 2;
      break;
  }

  for (Vertex u = 0; u < n; ++u) {
    if (!in[u] || base_total) {
      if (!exists(u, in_s_at(base_distance))) return false;
    }
    if (!in[u] && restraint_distance != 0) {
      if (!exists(u, out_s_at(restraint_distance))) return false;
    }
  }
  return true;
}

OracleConfig OracleConfig::FromEnvironment() {
  OracleConfig config;
  if (const char* env = std::getenv("HOPDOM_ORACLE_LIMIT")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      config.max_vertices = static_cast<int>(std::min<long>(value, kOracleHardLimit));
    }
  }
  return config;
}

namespace {

using Mask = uint64_t;

// Bitmask form of the predicates, for enumeration speed. Kept equivalent to
// CheckSet; tests confirm witnesses and minimality through CheckSet.
struct MaskPredicate {
  std::vector<Mask> ring1;  // N(i)
  std::vector<Mask> ring2;  // N2(i)
  SetKind kind;

  MaskPredicate(const Graph& g, const DistanceMatrix& dist, SetKind k)
      : ring1(g.order(), 0), ring2(g.order(), 0), kind(k) {
    const int n = g.order();
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (dist.at(i, j) == 1) ring1[i] |= Mask{1} << j;
        if (dist.at(i, j) == 2) ring2[i] |= Mask{1} << j;
      }
    }
  }

  bool operator()(Mask s) const {
    const int n = static_cast<int>(ring1.size());
    const bool total = kind == SetKind::kTotalDominating ||
                       kind == SetKind::kTwoStep ||
                       kind == SetKind::kTotalRestrainedHop ||
                       kind == SetKind::kTotalTwoStepRestrained;
    const bool adjacency_base =
        kind == SetKind::kDominating || kind == SetKind::kTotalDominating;
    const std::vector<Mask>* restraint = nullptr;
    if (kind == SetKind::kRestrainedHop ||
        kind == SetKind::kTotalRestrainedHop) {
      restraint = &ring1;
    } else if (kind == SetKind::kTwoStepRestrained ||
               kind == SetKind::kTotalTwoStepRestrained) {
      restraint = &ring2;
    }
    const std::vector<Mask>& base = adjacency_base ? ring1 : ring2;
    for (int u = 0; u < n; ++u) {
      const bool inside = (s >> u) & 1;
      if ((!inside || total) && (base[u] & s) == 0) return false;
      if (!inside && restraint != nullptr && ((*restraint)[u] & ~s) == 0) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

OptResult BruteForceMin(const Graph& g, SetKind kind,
                        const OracleConfig& config) {
  const int n = g.order();
  const int limit = std::min(config.max_vertices, kOracleHardLimit);
  if (n > limit) {
    throw Error(ErrorCode::kOracleLimitExceeded,
                "oracle limited to n <= " + std::to_string(limit) + ", got " +
                    std::to_string(n));
  }
  const MaskPredicate pass(g, AllPairsDistance(g), kind);

  std::vector<int> pick;
  for (int k = 0; k <= n; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Mask s = 0;
      for (int v : pick) s |= Mask{1} << v;
      if (pass(s)) {
        return {OptStatus::kOptimal, k, {pick.begin(), pick.end()}};
      }
      // next k-combination of 0..n-1 in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace hopdom
