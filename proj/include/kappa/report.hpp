#pragma once

#include <string>

#include "kappa/suites.hpp"

namespace kappa {

enum class ReportFormat { Text, Json };

// Text: one aligned line per check plus a summary. Json: the schema is
// {"suite", "dims", "seed", "checks": [{"name","dim","max_error","tolerance",
// "pass"}], "summary": {"passed","failed"}, "h_match"?}. Byte-identical for
// identical configs.
std::string emit_report(const SuiteReport& report, ReportFormat format);

}  // namespace kappa
