#ifndef HOPDOM_ORACLE_H_
#define HOPDOM_ORACLE_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hopdom/graph.h"

namespace hopdom {

enum class SetKind {
  kDominating,
  kTotalDominating,
  kHop,
  kTwoStep,
  kRestrainedHop,
  kTotalRestrainedHop,
  kTwoStepRestrained,
  kTotalTwoStepRestrained,
};

// The six kinds that have an integer program.
inline constexpr std::array<SetKind, 6> kProgramKinds = {
    SetKind::kHop,
    SetKind::kTwoStep,
    SetKind::kRestrainedHop,
    SetKind::kTotalRestrainedHop,
    SetKind::kTwoStepRestrained,
    SetKind::kTotalTwoStepRestrained,
};

inline constexpr std::array<SetKind, 8> kAllKinds = {
    SetKind::kDominating,        SetKind::kTotalDominating,
    SetKind::kHop,               SetKind::kTwoStep,
    SetKind::kRestrainedHop,     SetKind::kTotalRestrainedHop,
    SetKind::kTwoStepRestrained, SetKind::kTotalTwoStepRestrained,
};

// Short names used on the command line and in reports:
// dom, tdom, hop, 2step, rh, trh, 2sr, t2sr.
std::string_view KindName(SetKind kind);
std::optional<SetKind> KindFromName(std::string_view name);

enum class OptStatus { kOptimal, kInfeasible };

std::string_view StatusName(OptStatus status);

struct OptResult {
  OptStatus status = OptStatus::kInfeasible;
  int value = 0;                // meaningful when kOptimal
  std::vector<Vertex> witness;  // sorted; meaningful when kOptimal
};

// Literal truth of the definition of `kind` for the set `s` (any order,
// duplicates ignored). Throws kVertexOutOfRange.
//
//   Hop:                 every u outside S has some v in S with d(u,v) = 2
//   TwoStep:             every u in V has some v in S with d(u,v) = 2
//   RestrainedHop:       Hop, and every u outside S has an outside neighbour
//   TotalRestrainedHop:  TwoStep, with the same distance-1 restraint
//   TwoStepRestrained:   Hop, and every u outside S has an outside vertex at
//                        distance exactly 2
//   TotalTwoStepRestrained: TwoStep, with the distance-2 restraint
//   Dominating / TotalDominating: the usual adjacency versions.
bool CheckSet(const Graph& g, std::span<const Vertex> s, SetKind kind);
bool CheckSet(const Graph& g, const DistanceMatrix& dist,
              std::span<const Vertex> s, SetKind kind);

struct OracleConfig {
  int max_vertices = 20;

  // Default limit, overridden by HOPDOM_ORACLE_LIMIT when set.
  static OracleConfig FromEnvironment();
};

// Hard ceiling for the bitmask enumeration regardless of configuration.
inline constexpr int kOracleHardLimit = 30;

// Exhaustive minimum by increasing cardinality; within one cardinality,
// subsets are tried in lexicographic order of their sorted vertex lists and
// the first passing one is the witness. Throws kOracleLimitExceeded.
OptResult BruteForceMin(const Graph& g, SetKind kind,
                        const OracleConfig& config = {});

}  // namespace hopdom

#endif  // HOPDOM_ORACLE_H_
