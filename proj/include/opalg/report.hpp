#pragma once

#include <cstdint>
#include <string>

#include "opalg/io.hpp"

namespace opalg {

struct ReportOptions {
  unsigned threads = 1;   // workers for exhaustive ideal enumeration
  std::uint64_t seed = 0; // work ordering only
  std::uint64_t enumeration_limit = 4096;  // skip ideal enumeration above this many subspaces
};

Json analyze_report(const PresentationFile& p, const ReportOptions& opt = {});
Json radical_report(const PresentationFile& p);
Json decompose_report(const PresentationFile& p);
/// Requires a group action.
Json classify_report(const PresentationFile& p);
/// Runs both ideal tests; a disagreement raises TheoremViolation.
Json check_ideal_report(const PresentationFile& p, const Subspace& ideal);

/// Indented plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace opalg
