#ifndef HOPDOM_CLI_COMMANDS_H_
#define HOPDOM_CLI_COMMANDS_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "cli/report.h"
#include "hopdom/error.h"
#include "hopdom/ip_solver.h"
#include "hopdom/oracle.h"
#include "hopdom/prob_bounds.h"

namespace hopdom::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitViolation = 3,
  kExitResource = 4,
};

int ExitCodeFor(ErrorCode code);

enum class Method { kIp, kOracle, kBoth };

struct Limits {
  OracleConfig oracle = OracleConfig::FromEnvironment();
  SolverConfig solver = SolverConfig::FromEnvironment();
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

struct SolveOptions {
  std::vector<SetKind> kinds{kProgramKinds.begin(), kProgramKinds.end()};
  Method method = Method::kBoth;
  bool timing = false;
  Limits limits;
};

// Per-kind status/value/witness; with Method::kBoth also the oracle's
// answer and an agreement flag, and kExitViolation on any disagreement.
CommandResult SolveGraph(const Graph& g, const SolveOptions& options);

// Bound catalogue with exact values from the solver (six programs) and the
// oracle (total domination, distance-2 identities) where they are in reach.
// kExitViolation when an applicable bound fails.
CommandResult BoundsForGraph(const Graph& g, const Limits& limits);

struct VerifyOptions {
  int n_min = 4;
  int n_max = 8;
  std::vector<double> p_list{0.3, 0.6};
  int trials = 1;  // replicates per (n, p)
  uint64_t seed = 0;
  Limits limits;
};

// Seed of replicate r for (n, p_list[p_index]); `gen gnp n p --seed <it>`
// rebuilds the instance.
uint64_t VerifyInstanceSeed(uint64_t seed, int n, int p_index, int replicate);

// Sweep of seeded G(n,p) instances: solver/oracle agreement for the six
// programs, every bound entry against oracle optima, and the distance-2
// identities. kExitViolation iff anything failed. No timing in the report,
// so a fixed seed reproduces it byte for byte.
CommandResult Verify(const VerifyOptions& options);

struct MonteCarloOptions {
  RestraintKind kind = RestraintKind::kRh;
  double p = 0.5;
  int64_t samples = 10000;
  uint64_t seed = 1;
};

CommandResult MonteCarlo(const Graph& g, const MonteCarloOptions& options);

// Entry point of the `hopdom` executable.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace hopdom::cli

#endif  // HOPDOM_CLI_COMMANDS_H_
