#include "cli/commands.h"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli/edge_list.h"
#include "hopdom/graph.h"
#include "hopdom/ip_model.h"
#include "hopdom/matching.h"
#include "hopdom/random.h"

namespace hopdom::cli {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
      return kExitParse;
    case ErrorCode::kOracleLimitExceeded:
    case ErrorCode::kNodeLimitExceeded:
      return kExitResource;
    case ErrorCode::kInternal:
      return kExitViolation;
    default:
      return kExitUsage;
  }
}

namespace {

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kIp: return "ip";
    case Method::kOracle: return "oracle";
    case Method::kBoth: return "both";
  }
  return "?";
}

ExactValue ExactFrom(OptStatus status, int64_t value) {
  return status == OptStatus::kOptimal
             ? ExactValue::Optimal(static_cast<int>(value))
             : ExactValue::Infeasible();
}

std::optional<int> GammaH(const std::map<SetKind, ExactValue>& exact) {
  auto it = exact.find(SetKind::kHop);
  if (it == exact.end() || it->second.state != ExactValue::State::kOptimal) {
    return std::nullopt;
  }
  return it->second.value;
}

}  // namespace

CommandResult SolveGraph(const Graph& g, const SolveOptions& options) {
  const DistanceMatrix dist = AllPairsDistance(g);
  CommandResult result;
  Json& report = result.report;
  report["command"] = "solve";
  report["input"] = ToJson(FingerprintOf(g));
  report["method"] = MethodName(options.method);
  report["degree_profile"] = ToJson(ComputeDegreeProfile(g, dist));
  report["matching"] = ToJson(MaxMatching(g));
  report["hop_matching"] = ToJson(HopMatching(g));

  bool all_agree = true;
  Json params = Json::object();
  for (SetKind kind : options.kinds) {
    Json entry{{"method", MethodName(options.method)}};
    std::optional<SolveResult> ip;
    std::optional<OptResult> oracle;
    if (options.method != Method::kOracle) {
      ip = Solve(BuildInstance(g, dist, kind), options.limits.solver);
      entry["ip"] = ToJson(*ip, options.timing);
    }
    if (options.method != Method::kIp) {
      oracle = BruteForceMin(g, kind, options.limits.oracle);
      entry["oracle"] = ToJson(*oracle);
    }
    // headline answer: the solver's when it ran, else the oracle's
    const OptStatus status = ip ? ip->status : oracle->status;
    entry["status"] = StatusName(status);
    if (status == OptStatus::kOptimal) {
      entry["value"] = ip ? ip->value : oracle->value;
      entry["witness"] = ip ? ip->witness : oracle->witness;
    }
    if (ip && oracle) {
      const bool agree =
          ip->status == oracle->status &&
          (ip->status == OptStatus::kInfeasible || ip->value == oracle->value);
      entry["agreement"] = agree;
      all_agree &= agree;
    }
    params[std::string(KindName(kind))] = std::move(entry);
  }
  report["parameters"] = std::move(params);
  if (options.method == Method::kBoth) report["agreement"] = all_agree;
  result.exit_code = all_agree ? kExitOk : kExitViolation;
  return result;
}

CommandResult BoundsForGraph(const Graph& g, const Limits& limits) {
  const DistanceMatrix dist = AllPairsDistance(g);
  std::map<SetKind, ExactValue> exact;
  for (SetKind kind : kProgramKinds) {
    try {
      const SolveResult r = Solve(BuildInstance(g, dist, kind), limits.solver);
      exact[kind] = ExactFrom(r.status, r.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNodeLimitExceeded) throw;
    }
  }
  const bool oracle_reach =
      g.order() <= std::min(limits.oracle.max_vertices, kOracleHardLimit);
  if (oracle_reach) {
    const OptResult t = BruteForceMin(g, SetKind::kTotalDominating, limits.oracle);
    exact[SetKind::kTotalDominating] = ExactFrom(t.status, t.value);
  }

  const MatchingResult m = MaxMatching(g);
  const HopMatchingResult h = HopMatching(g);
  BoundReport bounds = BoundCatalog(g, m.size, h.size, GammaH(exact));
  AttachExactValues(bounds, exact);

  CommandResult result;
  Json& report = result.report;
  report["command"] = "bounds";
  report["input"] = ToJson(FingerprintOf(g));
  report["degree_profile"] = ToJson(ComputeDegreeProfile(g, dist));
  report["matching"] = ToJson(m);
  report["hop_matching"] = ToJson(h);
  report["bounds"] = ToJson(bounds);
  Json exact_json = Json::object();
  for (auto [kind, value] : exact) exact_json[std::string(KindName(kind))] = ToJson(value);
  report["exact"] = exact_json;

  bool ok = CountViolations(bounds) == 0;
  if (oracle_reach) {
    Json ids = Json::array();
    for (const IdentityCheck& c : CheckDistanceTwoIdentities(g, limits.oracle)) {
      ids.push_back(ToJson(c));
      ok &= c.holds;
    }
    report["identities"] = ids;
  } else {
    report["identities"] = "unknown";
  }
  result.exit_code = ok ? kExitOk : kExitViolation;
  return result;
}

uint64_t VerifyInstanceSeed(uint64_t seed, int n, int p_index, int replicate) {
  const uint64_t key = (static_cast<uint64_t>(n) << 40) ^
                       (static_cast<uint64_t>(p_index) << 24) ^
                       static_cast<uint64_t>(replicate);
  return Rng::Substream(seed, key).Next();
}

CommandResult Verify(const VerifyOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kBadParams, "trials must be >= 1");
  if (options.n_min < 1 || options.n_max < options.n_min) {
    throw Error(ErrorCode::kBadParams, "bad n range");
  }
  if (options.p_list.empty()) throw Error(ErrorCode::kBadParams, "empty p list");
  const int limit = std::min(options.limits.oracle.max_vertices, kOracleHardLimit);
  if (options.n_max > limit) {
    throw Error(ErrorCode::kOracleLimitExceeded,
                "verify needs n <= oracle limit " + std::to_string(limit));
  }

  Json violations = Json::array();
  int64_t instances = 0, agreement_checks = 0, bound_applicable = 0,
          bound_holding = 0, identity_checks = 0;
  std::map<std::string, std::pair<int64_t, int64_t>> per_bound;  // applicable, held

  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (int pi = 0; pi < static_cast<int>(options.p_list.size()); ++pi) {
      const double p = options.p_list[pi];
      for (int r = 0; r < options.trials; ++r) {
        const uint64_t seed = VerifyInstanceSeed(options.seed, n, pi, r);
        const Graph g = GnpGraph(n, p, seed);
        const DistanceMatrix dist = AllPairsDistance(g);
        ++instances;
        auto violation = [&](std::string type, std::string detail) {
          violations.push_back({{"n", n},
                                {"p", Real(p)},
                                {"replicate", r},
                                {"seed", seed},
                                {"type", std::move(type)},
                                {"detail", std::move(detail)}});
        };

        std::map<SetKind, ExactValue> exact;
        for (SetKind kind : kProgramKinds) {
          const SolveResult ip =
              Solve(BuildInstance(g, dist, kind), options.limits.solver);
          const OptResult oracle = BruteForceMin(g, kind, options.limits.oracle);
          ++agreement_checks;
          const bool agree = ip.status == oracle.status &&
                             (ip.status == OptStatus::kInfeasible ||
                              ip.value == oracle.value);
          if (!agree) violation("agreement", std::string(KindName(kind)));
          exact[kind] = ExactFrom(oracle.status, oracle.value);
        }
        const OptResult t =
            BruteForceMin(g, SetKind::kTotalDominating, options.limits.oracle);
        exact[SetKind::kTotalDominating] = ExactFrom(t.status, t.value);

        BoundReport bounds = BoundCatalog(g, MaxMatching(g).size,
                                          HopMatching(g).size, GammaH(exact));
        AttachExactValues(bounds, exact);
        for (const BoundEntry& e : bounds.entries) {
          auto& [applicable, held] = per_bound[e.id];
          if (e.holds == Verdict::kHolds || e.holds == Verdict::kViolated) {
            ++applicable;
            ++bound_applicable;
          }
          if (e.holds == Verdict::kHolds) {
            ++held;
            ++bound_holding;
          }
          if (e.holds == Verdict::kViolated) violation("bound", e.id);
        }
        for (const IdentityCheck& c :
             CheckDistanceTwoIdentities(g, options.limits.oracle)) {
          ++identity_checks;
          if (!c.holds) violation("identity", c.id);
        }
      }
    }
  }

  CommandResult result;
  Json& report = result.report;
  report["command"] = "verify";
  Json p_json = Json::array();
  for (double p : options.p_list) p_json.push_back(Real(p));
  report["config"] = {{"n_min", options.n_min}, {"n_max", options.n_max},
                      {"p", p_json},            {"trials", options.trials},
                      {"seed", options.seed}};
  Json coverage = Json::object();
  for (const auto& [id, counts] : per_bound) {
    coverage[id] = {{"applicable", counts.first}, {"holds", counts.second}};
  }
  report["summary"] = {{"instances", instances},
                       {"agreement_checks", agreement_checks},
                       {"bound_checks", bound_applicable},
                       {"bound_checks_holding", bound_holding},
                       {"identity_checks", identity_checks},
                       {"violations", violations.size()}};
  report["bound_coverage"] = coverage;
  report["violations"] = violations;
  result.exit_code = violations.empty() ? kExitOk : kExitViolation;
  return result;
}

CommandResult MonteCarlo(const Graph& g, const MonteCarloOptions& options) {
  const ProbVector p = ProbVector::Uniform(g.order(), options.p);
  const ExpectedSizeResult r =
      ExpectedSizeCheck(g, p, options.kind, options.samples, options.seed);
  CommandResult result;
  result.report = {{"command", "montecarlo"},
                   {"input", ToJson(FingerprintOf(g))},
                   {"kind", RestraintKindName(options.kind)},
                   {"p", Real(options.p)},
                   {"seed", options.seed},
                   {"result", ToJson(r)}};
  result.exit_code = r.predicate_failures == 0 ? kExitOk : kExitViolation;
  return result;
}

namespace {

void Emit(const Json& report, const std::string& path, std::ostream& out) {
  const std::string text = Serialize(report);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  file << text;
}

std::vector<SetKind> ParseKinds(const std::string& list) {
  if (list == "all") return {kProgramKinds.begin(), kProgramKinds.end()};
  std::vector<SetKind> kinds;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto kind = KindFromName(name);
    if (!kind || ProblemName(*kind).empty()) {
      throw Error(ErrorCode::kBadParams, "unknown parameter '" + name +
                                             "' (hop, 2step, rh, trh, 2sr, t2sr)");
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw Error(ErrorCode::kBadParams, "no parameters given");
  return kinds;
}

// "4..8" or "6".
std::pair<int, int> ParseRange(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      size_t used = 0;
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used_lo), b = std::stoi(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size()) {
      throw std::invalid_argument(text);
    }
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kBadParams, "bad range '" + text + "' (use a..b)");
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact hop-type domination parameters, their integer programs "
               "and probabilistic bounds"};
  app.require_subcommand(1);

  std::string out_path;
  uint64_t seed = 1;

  auto* gen = app.add_subcommand("gen", "Write a graph in edge-list format");
  std::string family;
  std::vector<double> gen_params;
  gen->add_option("family", family,
                  "path | cycle | complete | complete_bipartite | petersen | "
                  "star | gnp")
      ->required();
  gen->add_option("params", gen_params, "Family parameters (gnp: n p)");
  gen->add_option("--seed", seed, "Seed for gnp");
  gen->add_option("-o,--out", out_path, "Output file (stdout if omitted)");

  auto* solve = app.add_subcommand("solve", "Exact parameters of a graph");
  std::string in_path, params_list = "all", method_name = "both";
  bool timing = false;
  solve->add_option("input", in_path, "Edge-list file")->required();
  solve->add_option("--params", params_list,
                    "all or a comma list of hop,2step,rh,trh,2sr,t2sr");
  solve->add_option("--method", method_name, "ip | oracle | both")
      ->check(CLI::IsMember({"ip", "oracle", "both"}));
  solve->add_flag("--timing", timing, "Include solver wall time");
  solve->add_option("-o,--out", out_path, "Report file (stdout if omitted)");

  auto* bounds = app.add_subcommand("bounds", "Check every upper bound");
  bounds->add_option("input", in_path, "Edge-list file")->required();
  bounds->add_option("-o,--out", out_path, "Report file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Seeded G(n,p) sweep");
  std::string n_range = "4..8";
  std::vector<double> p_list{0.3, 0.6};
  int trials = 10;
  verify->add_option("--n", n_range, "Vertex counts, a..b");
  verify->add_option("--p", p_list, "Edge probabilities")->delimiter(',');
  verify->add_option("--trials", trials, "Replicates per (n, p)");
  verify->add_option("--seed", seed, "Sweep seed");
  verify->add_option("-o,--out", out_path, "Report file (stdout if omitted)");

  auto* mc = app.add_subcommand("montecarlo", "Sample the X u Z u Y construction");
  std::string kind_name = "rh";
  double p_uniform = 0.5;
  int64_t samples = 100000;
  mc->add_option("input", in_path, "Edge-list file")->required();
  mc->add_option("--kind", kind_name, "rh | 2sr")
      ->check(CLI::IsMember({"rh", "2sr"}));
  mc->add_option("--p", p_uniform, "Selection probability for every vertex");
  mc->add_option("--samples", samples, "Number of trials");
  mc->add_option("--seed", seed, "Sampling seed");
  mc->add_option("-o,--out", out_path, "Report file (stdout if omitted)");

  auto* model = app.add_subcommand("model", "Print an integer program as text");
  std::string model_kind = "hop";
  model->add_option("input", in_path, "Edge-list file")->required();
  model->add_option("--kind", model_kind, "hop | 2step | rh | trh | 2sr | t2sr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Limits limits;
    if (gen->parsed()) {
      const Graph g = Generate(family, gen_params, seed);
      if (out_path.empty()) {
        WriteEdgeList(g, out);
      } else {
        std::ofstream file(out_path);
        if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + out_path + "'");
        WriteEdgeList(g, file);
        out << g.order() << ' ' << g.size() << '\n';
      }
      return kExitOk;
    }
    if (solve->parsed()) {
      SolveOptions options;
      options.kinds = ParseKinds(params_list);
      options.method = method_name == "ip"       ? Method::kIp
                       : method_name == "oracle" ? Method::kOracle
                                                 : Method::kBoth;
      options.timing = timing;
      options.limits = limits;
      const CommandResult r = SolveGraph(ReadEdgeListFile(in_path), options);
      Emit(r.report, out_path, out);
      return r.exit_code;
    }
    if (bounds->parsed()) {
      const CommandResult r = BoundsForGraph(ReadEdgeListFile(in_path), limits);
      Emit(r.report, out_path, out);
      return r.exit_code;
    }
    if (verify->parsed()) {
      VerifyOptions options;
      std::tie(options.n_min, options.n_max) = ParseRange(n_range);
      options.p_list = p_list;
      options.trials = trials;
      options.seed = seed;
      options.limits = limits;
      const CommandResult r = Verify(options);
      Emit(r.report, out_path, out);
      return r.exit_code;
    }
    if (mc->parsed()) {
      MonteCarloOptions options;
      options.kind = *RestraintKindFromName(kind_name);
      options.p = p_uniform;
      options.samples = samples;
      options.seed = seed;
      const CommandResult r = MonteCarlo(ReadEdgeListFile(in_path), options);
      Emit(r.report, out_path, out);
      return r.exit_code;
    }
    if (model->parsed()) {
      const std::vector<SetKind> kinds = ParseKinds(model_kind);
      if (kinds.size() != 1) {
        throw Error(ErrorCode::kBadParams, "model takes exactly one kind");
      }
      WriteInstanceText(BuildInstance(ReadEdgeListFile(in_path), kinds[0]), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitUsage;
}

}  // namespace hopdom::cli
