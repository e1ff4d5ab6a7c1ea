// Command-line harness: runs the identity suites over chosen dimensions with
// a seeded RNG and emits a text or json report. Exit status is nonzero iff
// any check fails; usage errors exit with 2.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kappa/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of kappa-Poincare Poisson structures"};
  app.usage("verify <suite> [--dims 4,5,6] [--seed N] [--samples N] [--tol X] [--format text|json]");

  std::string suite_arg;
  app.add_option("suite", suite_arg, "one of: core, groups, brackets, schouten, affine, all")
      ->required();
  std::vector<int> dims{4, 5, 6};
  app.add_option("--dims", dims, "total dimensions to test")->delimiter(',');
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "RNG seed");
  int samples = 100;
  app.add_option("--samples", samples, "sample count for randomized checks")
      ->check(CLI::PositiveNumber);
  double tol = 1e-9;
  auto* tol_opt = app.add_option("--tol", tol, "numeric tolerance override");
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  const auto suite = kappa::parse_suite(suite_arg);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_arg << "'\n" << app.help() << std::endl;
    return 2;
  }

  kappa::SuiteConfig config;
  config.dims = dims;
  config.seed = seed;
  config.samples = samples;
  if (*tol_opt) config.tol_numeric = tol;

  try {
    const kappa::SuiteReport report = kappa::run_suite(*suite, config);
    const auto fmt = format == "json" ? kappa::ReportFormat::Json : kappa::ReportFormat::Text;
    std::cout << kappa::emit_report(report, fmt);
    return report.failed > 0 ? 1 : 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << std::endl;
    return 2;
  }
}
