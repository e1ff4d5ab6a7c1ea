#include "kappa/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace kappa {

namespace {

std::string text_report(const SuiteReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-40s %4s %12s %12s %8s  %s\n", "check", "dim", "max_error",
                "tolerance", "samples", "status");
  out << line;
  for (const auto& c : report.checks) {
    const std::string full = c.suite + "/" + c.name;
    std::snprintf(line, sizeof(line), "%-40s %4d %12.3e %12.3e %8d  %s\n", full.c_str(), c.dim,
                  c.max_error, c.tolerance, c.samples_run, c.pass ? "PASS" : "FAIL");
    out << line;
  }
  if (report.h_match) {
    std::snprintf(line, sizeof(line), "h_match: %.12g\n", *report.h_match);
    out << line;
  }
  std::snprintf(line, sizeof(line), "summary: %d passed, %d failed (suite=%s, seed=%llu)\n",
                report.passed, report.failed, report.suite.c_str(),
                static_cast<unsigned long long>(report.seed));
  out << line;
  return out.str();
}

std::string json_report(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["dims"] = report.dims;
  j["seed"] = report.seed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.suite + "/" + c.name},
                           {"dim", c.dim},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["summary"] = {{"passed", report.passed}, {"failed", report.failed}};
  if (report.h_match) j["h_match"] = *report.h_match;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const SuiteReport& report, ReportFormat format) {
  return format == ReportFormat::Text ? text_report(report) : json_report(report);
}

}  // namespace kappa
