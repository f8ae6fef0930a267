#include <sstream>

#include "birat/harness.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("admissible discriminants") {
  for (int d : {14, 26, 38, 42}) CHECK(admissible(d));
  for (int d : {6, 8, 12, 20, 36, 40}) CHECK_FALSE(admissible(d));
  CHECK(d_invariant(8, 34) == 38);
  CHECK(d_invariant(5, 13) == 14);
  CHECK(d_invariant(0, 0) == 0);
}

TEST_CASE("expected-value file") {
  auto plans = load_plans(BIRAT_DATA_FILE);
  CHECK(plans.size() == 7);
  for (const auto& p : plans) {
    CHECK(p.degree > 0);
    CHECK(p.expected.count("multidegree") == 1);
    for (const auto& [name, ev] : p.expected) CHECK_FALSE(ev.citation.empty());
  }
  CHECK_THROWS(parse_plans(Json{{"schema", 99}, {"rows", Json::array()}}));
}

TEST_CASE("one row end to end") {
  auto plans = load_plans(BIRAT_DATA_FILE);
  auto it = std::find_if(plans.begin(), plans.end(), [](const RowPlan& p) { return p.tag == SurfaceTag::DP5; });
  REQUIRE(it != plans.end());
  RunOptions opts;
  opts.step_budget_seconds = 120;
  auto rep = run_row(*it, opts);
  CHECK(rep.passed());
  REQUIRE(rep.find("multidegree") != nullptr);
  CHECK(rep.find("multidegree")->status == CheckStatus::Pass);
  // optional steps are skipped, not failed
  REQUIRE(rep.find("inverse_delta") != nullptr);
  CHECK(rep.find("inverse_delta")->status == CheckStatus::Skipped);

  std::ostringstream os;
  emit_report({rep}, os);
  auto j = Json::parse(os.str());
  CHECK(j.contains("schema"));
  REQUIRE(j["rows"].size() == 1);
  for (const char* k : {"row", "prime", "seed", "retries", "seconds", "passed", "checks"}) CHECK(j["rows"][0].contains(k));
  CHECK(j["rows"][0]["checks"][0].contains("citation"));
  CHECK(format_tables({rep}).find("dP5") != std::string::npos);
}
