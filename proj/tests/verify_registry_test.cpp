#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verify.hpp"

TEST_SUITE("registry") {
  TEST_CASE("every required invariant tag is covered by a registered check") {
    std::set<std::string> covered;
    for (const ogt::CheckDef& def : ogt::check_registry()) {
      covered.insert(def.invariants.begin(), def.invariants.end());
    }
    for (const std::string& tag : ogt::required_invariant_tags()) {
      CAPTURE(tag);
      CHECK(covered.count(tag) == 1);
    }
  }

  TEST_CASE("tags follow the module.invariant naming of the library layout") {
    const std::set<std::string> modules = {"words", "sections", "wordproblem", "markedspace",
                                           "constructions"};
    for (const std::string& tag : ogt::required_invariant_tags()) {
      CAPTURE(tag);
      const auto dot = tag.find('.');
      REQUIRE(dot != std::string::npos);
      CHECK(modules.count(tag.substr(0, dot)) == 1);
    }
    for (const ogt::CheckDef& def : ogt::check_registry()) {
      for (const std::string& tag : def.invariants) {
        CAPTURE(def.id);
        const auto dot = tag.find('.');
        REQUIRE(dot != std::string::npos);
        CHECK(modules.count(tag.substr(0, dot)) == 1);
      }
    }
  }

  TEST_CASE("check ids are unique and suites are consistent") {
    std::set<std::string> ids;
    const std::vector<std::string> suites = ogt::suite_names();
    for (const ogt::CheckDef& def : ogt::check_registry()) {
      CAPTURE(def.id);
      CHECK(ids.insert(def.id).second);
      CHECK(std::find(suites.begin(), suites.end(), def.suite) != suites.end());
      CHECK_FALSE(def.id.empty());
      CHECK(static_cast<bool>(def.run));
    }
    CHECK(std::find(suites.begin(), suites.end(), "all") == suites.end());
    CHECK(std::is_sorted(suites.begin(), suites.end()));
  }

  TEST_CASE("run_suite and run_check handle unknown names") {
    const ogt::VerifyConfig config;
    CHECK_THROWS_AS(ogt::run_suite("nonexistent", config), std::invalid_argument);
    CHECK_THROWS_AS(ogt::run_check("nonexistent", config), std::invalid_argument);
  }

  TEST_CASE("a fast suite runs green and reports its shape") {
    ogt::VerifyConfig config;
    config.len_cap = 6;  // keep the meta-test quick
    const auto results = ogt::run_suite("contraction-table", config);
    REQUIRE(results.size() == 2);
    for (const ogt::CheckResult& r : results) {
      CAPTURE(r.id);
      CHECK(r.pass);
      CHECK_FALSE(r.detail.empty());
    }
    const nlohmann::json j = ogt::report_json("contraction-table", results);
    CHECK(j["suite"] == "contraction-table");
    CHECK(j["total"] == 2);
    CHECK(j["passed"] == 2);
    CHECK(j["failed"] == 0);
    CHECK(j["ok"] == true);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "k-table");

    const std::string table = ogt::report_table("contraction-table", results);
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("2/2 checks passed") != std::string::npos);
  }

  TEST_CASE("single checks are addressable by id") {
    const ogt::VerifyConfig config;
    const ogt::CheckResult r = ogt::run_check("vertex-labels-15", config);
    CHECK(r.id == "vertex-labels-15");
    CHECK(r.pass);
  }

  TEST_CASE("the all pseudo-suite includes every check") {
    // registry order, without executing: compare sizes via suite filtering
    std::size_t total = 0;
    const ogt::VerifyConfig config;
    for (const std::string& suite : ogt::suite_names()) {
      total += std::count_if(ogt::check_registry().begin(), ogt::check_registry().end(),
                             [&](const ogt::CheckDef& d) { return d.suite == suite; });
    }
    CHECK(total == ogt::check_registry().size());
  }
}
