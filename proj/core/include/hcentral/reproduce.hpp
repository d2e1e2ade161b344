#pragma once

#include <string>
#include <vector>

#include "hcentral/analysis.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// Outcome of one documented claim checked against the bundled reference
/// dataset. pass: measured value confirms the claim within its tolerance.
/// flag: the computation succeeded but the measured value departs from the
/// published narrative (the measured value is reported; see the check's
/// note for the known cause). fail: the artifact could not reproduce its
/// own data (fixture corruption, identity violation).
enum class CheckStatus { pass, flag, fail };

std::string to_string(CheckStatus status);

struct CheckResult {
  CheckStatus status = CheckStatus::fail;
  std::string name;      ///< stable identifier, e.g. "corr_h_1999_2004"
  std::string measured;  ///< value this run computed
  std::string reference; ///< published value or bound it is held against
  std::string note;      ///< context, including why a flag is expected
};

struct ReproductionReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus status) const;
  bool has_failures() const;
};

/// Runs the full published pipeline on the bundled reference cohort:
/// fixture identities, cross-snapshot h correlations, matrix-level claims,
/// area-vs-interval difference counts, optimal radius versus the half-mean-h
/// rule of thumb, and the production-impact regression.
ReproductionReport run_reproduction(const CorrelationOptions& options = {});

/// One line per check: STATUS name: measured <value> reference <value>
/// (note). Ends with a summary line.
std::string render_text(const ReproductionReport& report);

}  // namespace hcentral
