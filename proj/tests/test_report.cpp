#include <doctest.h>

#include <json.hpp>

#include "kappa/report.hpp"

using namespace kappa;

TEST_CASE("suite name parsing") {
  CHECK(parse_suite("core") == Suite::Core);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_FALSE(parse_suite("bogus").has_value());
  CHECK(suite_name(Suite::Brackets) == "brackets");
}

TEST_CASE("dimension validation") {
  SuiteConfig cfg;
  cfg.samples = 5;
  cfg.dims = {3};
  CHECK_THROWS_AS(run_suite(Suite::Core, cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(Suite::Brackets, cfg), std::invalid_argument);
  CHECK_NOTHROW(run_suite(Suite::Affine, cfg));
  cfg.dims = {};
  CHECK_THROWS_AS(run_suite(Suite::Core, cfg), std::invalid_argument);
  cfg.dims = {12};
  CHECK_THROWS_AS(run_suite(Suite::Core, cfg), std::invalid_argument);
}

TEST_CASE("json schema") {
  SUBCASE("empty report") {
    SuiteReport empty;
    empty.suite = "core";
    empty.dims = {4};
    empty.seed = 7;
    const auto j = nlohmann::json::parse(emit_report(empty, ReportFormat::Json));
    CHECK(j["suite"] == "core");
    CHECK(j["dims"] == std::vector<int>{4});
    CHECK(j["seed"] == 7);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].empty());
    CHECK(j["summary"]["passed"] == 0);
    CHECK(j["summary"]["failed"] == 0);
    CHECK_FALSE(j.contains("h_match"));
  }

  SUBCASE("single passing check") {
    SuiteReport r;
    r.suite = "core";
    r.dims = {4};
    r.seed = 1;
    CheckResult c;
    c.suite = "core";
    c.name = "completeness";
    c.dim = 4;
    c.max_error = 1e-14;
    c.tolerance = 1e-10;
    c.samples_run = 100;
    c.pass = true;
    r.checks.push_back(c);
    r.passed = 1;
    const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
    REQUIRE(j["checks"].size() == 1);
    const auto& jc = j["checks"][0];
    CHECK(jc["name"] == "core/completeness");
    CHECK(jc["dim"] == 4);
    CHECK(jc["max_error"] == 1e-14);
    CHECK(jc["tolerance"] == 1e-10);
    CHECK(jc["pass"] == true);
  }

  SUBCASE("real run carries h_match and a stable schema") {
    SuiteConfig cfg;
    cfg.dims = {4};
    cfg.samples = 10;
    cfg.seed = 5;
    const SuiteReport r = run_suite(Suite::Brackets, cfg);
    REQUIRE(r.h_match.has_value());
    CHECK(*r.h_match == doctest::Approx(-1.0).epsilon(1e-9));
    const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
    CHECK(j["h_match"].get<double>() == doctest::Approx(-1.0));
    for (const auto& jc : j["checks"]) {
      CHECK(jc.contains("name"));
      CHECK(jc.contains("dim"));
      CHECK(jc.contains("max_error"));
      CHECK(jc.contains("tolerance"));
      CHECK(jc.contains("pass"));
    }
  }
}

TEST_CASE("determinism and ordering") {
  SuiteConfig cfg;
  cfg.dims = {5, 4};  // intentionally unsorted; output must still be ordered
  cfg.samples = 10;
  cfg.seed = 42;
  const SuiteReport r1 = run_suite(Suite::Core, cfg);
  const SuiteReport r2 = run_suite(Suite::Core, cfg);
  CHECK(emit_report(r1, ReportFormat::Json) == emit_report(r2, ReportFormat::Json));
  CHECK(emit_report(r1, ReportFormat::Text) == emit_report(r2, ReportFormat::Text));

  // ordering: (suite, dim, name) ascending
  for (size_t i = 1; i < r1.checks.size(); ++i) {
    const auto& a = r1.checks[i - 1];
    const auto& b = r1.checks[i];
    const bool ordered = a.dim < b.dim || (a.dim == b.dim && a.name < b.name);
    CHECK(ordered);
  }
}

TEST_CASE("exit-status contract fields") {
  SuiteConfig cfg;
  cfg.dims = {4};
  cfg.samples = 10;
  cfg.seed = 2;
  const SuiteReport r = run_suite(Suite::Groups, cfg);
  CHECK(r.failed == 0);
  CHECK(r.passed == static_cast<int>(r.checks.size()));
  for (const auto& c : r.checks) CHECK(c.pass == (c.max_error <= c.tolerance));
}
