#include "cli/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hopdom/error.h"

namespace hopdom::cli {

Json Real(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return std::strtod(buf, nullptr);
}

Json ToJson(const Fingerprint& f) {
  return {{"n", f.n}, {"m", f.m}, {"id", f.ToString()}};
}

Json ToJson(const OptResult& r) {
  Json j{{"status", StatusName(r.status)}};
  if (r.status == OptStatus::kOptimal) {
    j["value"] = r.value;
    j["witness"] = r.witness;
  }
  return j;
}

Json ToJson(const SolveResult& r, bool with_timing) {
  Json j{{"status", StatusName(r.status)}, {"nodes", r.nodes_explored}};
  if (r.status == OptStatus::kOptimal) {
    j["value"] = r.value;
    j["witness"] = r.witness;
  }
  if (with_timing) {
    j["seconds"] = Real(std::chrono::duration<double>(r.elapsed).count());
  }
  return j;
}

Json ToJson(const DegreeProfile& p) {
  return {{"deg", p.deg},
          {"hopdeg", p.hopdeg},
          {"delta", p.delta},
          {"delta_h", p.delta_h}};
}

Json ToJson(const MatchingResult& m) {
  Json pairs = Json::array();
  for (auto [u, v] : m.pairs) pairs.push_back({u, v});
  return {{"size", m.size},
          {"pairs", pairs},
          {"classification", MatchingClassName(m.classification)}};
}

Json ToJson(const HopMatchingResult& m) {
  Json paths = Json::array();
  for (const HopPath& p : m.paths) paths.push_back({p.u, p.middle, p.v});
  return {{"size", m.size},
          {"paths", paths},
          {"classification", MatchingClassName(m.classification)}};
}

Json ToJson(const ExactValue& v) {
  switch (v.state) {
    case ExactValue::State::kUnknown: return "unknown";
    case ExactValue::State::kInfeasible: return "infeasible";
    case ExactValue::State::kOptimal: return v.value;
  }
  return nullptr;
}

Json ToJson(const BoundReport& r) {
  Json entries = Json::array();
  for (const BoundEntry& e : r.entries) {
    Json hyps = Json::array();
    for (const Hypothesis& h : e.hypotheses) {
      hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}});
    }
    entries.push_back({{"id", e.id},
                       {"parameter", KindName(e.parameter)},
                       {"formula", e.formula},
                       {"value", Real(e.value)},
                       {"hypotheses", hyps},
                       {"applicable", e.applicable},
                       {"exact", ToJson(e.exact)},
                       {"holds", VerdictName(e.holds)}});
  }
  Json j{{"n", r.n},         {"delta", r.delta}, {"delta_h", r.delta_h},
         {"nu", r.nu},       {"nu_h", r.nu_h},   {"entries", entries},
         {"violations", CountViolations(r)}};
  j["gamma_h"] = r.gamma_h ? Json(*r.gamma_h) : Json("unknown");
  return j;
}

Json ToJson(const IdentityCheck& c) {
  return {{"id", c.id},
          {"lhs", ToJson(c.lhs)},
          {"rhs", ToJson(c.rhs)},
          {"holds", c.holds}};
}

Json ToJson(const ExpectedSizeResult& r) {
  const double gap = std::abs(r.mean - r.f_value);
  Json z = r.std_error > 0 ? Real(gap / r.std_error)
                           : (gap == 0 ? Json(0.0) : Json(nullptr));
  return {{"samples", r.samples},
          {"mean", Real(r.mean)},
          {"stderr", Real(r.std_error)},
          {"f_value", Real(r.f_value)},
          {"z_score", z},
          {"predicate_failures", r.predicate_failures}};
}

std::string Serialize(const Json& report) { return report.dump(2) + "\n"; }

Json ParseReport(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace hopdom::cli
