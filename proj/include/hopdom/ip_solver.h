#ifndef HOPDOM_IP_SOLVER_H_
#define HOPDOM_IP_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopdom/ip_model.h"
#include "hopdom/oracle.h"

namespace hopdom {

enum class BranchingRule {
  // Free variable covering the most currently unsatisfied GE rows; ties go
  // to the lowest index.
  kMostUnsatisfiedCover,
  // Lowest-index free variable that can still help an unsatisfied GE row.
  kLowestIndex,
};

struct SolverConfig {
  int64_t node_limit = 50'000'000;
  BranchingRule branching = BranchingRule::kMostUnsatisfiedCover;
  bool greedy_incumbent = true;

  // Defaults, with node_limit overridden by HOPDOM_NODE_LIMIT when set.
  static SolverConfig FromEnvironment();
};

struct SolveResult {
  OptStatus status = OptStatus::kInfeasible;
  int64_t value = 0;
  std::vector<int> assignment;  // 0/1 per variable, empty when infeasible
  std::vector<Vertex> witness;  // variables set to 1
  int64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Exact depth-first branch and bound over binary vectors. Objective costs
// must be nonnegative (kBadParams otherwise). Throws kNodeLimitExceeded
// when the search outgrows cfg.node_limit, and kInternal if the returned
// witness fails the post-hoc feasibility check. Deterministic in
// (inst, cfg): same witness, same node count.
SolveResult Solve(const IpInstance& inst, const SolverConfig& cfg = {});

// Greedy upper bound: repeatedly raise the variable that most reduces the
// residual of the GE rows, then repair violated LE rows through their
// negative coefficients. The result is checked before it is returned;
// nullopt when no feasible assignment was reached.
std::optional<std::vector<int>> GreedyIncumbent(const IpInstance& inst);

}  // namespace hopdom

#endif  // HOPDOM_IP_SOLVER_H_
