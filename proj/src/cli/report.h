#ifndef HOPDOM_CLI_REPORT_H_
#define HOPDOM_CLI_REPORT_H_

#include <string>
#include <string_view>

#include "hopdom/graph.h"
#include "hopdom/ip_solver.h"
#include "hopdom/matching.h"
#include "hopdom/oracle.h"
#include "hopdom/prob_bounds.h"
#include "json.hpp"

namespace hopdom::cli {

using Json = nlohmann::json;

// Reals are rounded to 10 significant digits before they enter a report,
// so the serialised text is stable and parses back to the same document.
// Non-finite values become null.
Json Real(double x);

Json ToJson(const Fingerprint& f);
Json ToJson(const OptResult& r);
Json ToJson(const SolveResult& r, bool with_timing);
Json ToJson(const DegreeProfile& p);
Json ToJson(const MatchingResult& m);
Json ToJson(const HopMatchingResult& m);
Json ToJson(const ExactValue& v);
Json ToJson(const BoundReport& r);
Json ToJson(const IdentityCheck& c);
Json ToJson(const ExpectedSizeResult& r);

// Two-space indented JSON with sorted keys and a trailing newline.
std::string Serialize(const Json& report);
Json ParseReport(std::string_view text);

}  // namespace hopdom::cli

#endif  // HOPDOM_CLI_REPORT_H_
