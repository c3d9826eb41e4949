#include "doctest.h"

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "overgroup/markedspace.hpp"
#include "overgroup/oracle.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

using namespace ovg;

namespace {

Decider make(const char* text) { return Decider(GroupSpec::parse(text)); }

// Quadratic reference: keep the shortlex-first representative of every
// element, deduplicating with pairwise decider equality and no prefilter.
std::vector<ReducedWord> naive_ball(Decider& d, int radius) {
  std::vector<ReducedWord> reps;
  for_each_reduced_word(static_cast<std::size_t>(radius), [&](const ReducedWord& w) {
    for (const ReducedWord& rep : reps) {
      if (d.equal(rep, w)) return true;
    }
    reps.push_back(w);
    return true;
  });
  return reps;
}

}  // namespace

TEST_SUITE("markedspace") {
  TEST_CASE("ball agrees with the quadratic reference enumeration") {
    for (const char* text : {"exact@(0)", "exact@(01)", "beta-01@121(0)"}) {
      CAPTURE(text);
      Decider d = make(text);
      for (int r = 0; r <= 3; ++r) {
        Decider fresh = make(text);
        const Ball b = ball(d, r);
        CHECK(b.representatives == naive_ball(fresh, r));
      }
    }
    Decider a01 = make("alpha@(01)");
    Decider a01b = make("alpha@(01)");
    CHECK(ball(a01, 2).representatives == naive_ball(a01b, 2));
  }

  TEST_CASE("growth values are the ball sizes") {
    Decider d = make("exact@(01)");
    const std::vector<std::size_t> g = growth_values(d, 3);
    REQUIRE(g.size() == 4);
    for (int r = 0; r <= 3; ++r) {
      CHECK(g[static_cast<std::size_t>(r)] == ball(d, r).size());
    }
    CHECK(g[0] == 1);
  }

  TEST_CASE("balls_equal reports the shortlex-least witness") {
    Decider e0 = make("exact@(0)");
    Decider a0 = make("alpha@(0)");
    const BallsEqualResult at0 = balls_equal(e0, a0, 0);
    CHECK(at0.equal);
    CHECK_FALSE(at0.witness.has_value());
    const BallsEqualResult at1 = balls_equal(e0, a0, 1);
    CHECK_FALSE(at1.equal);
    REQUIRE(at1.witness.has_value());
    CHECK(at1.witness->str() == "d");
  }

  TEST_CASE("metric distinguishes exact values from cap-limited upper bounds") {
    Decider e0 = make("exact@(0)");
    Decider a0 = make("alpha@(0)");
    const MetricResult hit = metric(e0, a0, 3);
    CHECK(hit.exact);
    CHECK(hit.n == 0);
    CHECK(hit.distance == 1.0);
    REQUIRE(hit.witness.has_value());
    CHECK(hit.witness->str() == "d");

    Decider s1 = make("exact@(012)");
    Decider s2 = make("exact@(012)");
    const MetricResult same = metric(s1, s2, 2);
    CHECK_FALSE(same.exact);
    CHECK(same.n == 2);
    CHECK(same.distance == 0.25);
    CHECK_FALSE(same.witness.has_value());
  }

  TEST_CASE("distinguishing word search matches the frozen witnesses") {
    Decider a0 = make("alpha@(0)");
    Decider b01 = make("beta-01@(0)");
    const auto w = find_distinguishing_word(a0, b01, 8);
    REQUIRE(w.has_value());
    CHECK(w->str() == "B");
    Decider x1 = make("exact@(0)");
    Decider x2 = make("exact@(0)");
    CHECK_FALSE(find_distinguishing_word(x1, x2, 6).has_value());
  }

  TEST_CASE("signatures are sound prefilters: equal elements share signatures") {
    const Oracle o = Oracle::parse("(0)");
    // b = c = x at exact@(0); all must share a signature bucket
    const std::string sb = element_signature(ReducedWord::parse("b"), o, 3);
    CHECK(element_signature(ReducedWord::parse("c"), o, 3) == sb);
    CHECK(element_signature(ReducedWord::parse("x"), o, 3) == sb);
    // d is trivial there, b is not
    CHECK(element_signature(ReducedWord::parse("d"), o, 3) != sb);
    CHECK(element_signature(ReducedWord::parse(""), o, 3) ==
          element_signature(ReducedWord::parse("d"), o, 3));
    // words outside the level stabilizer get the marker signature
    CHECK(element_signature(ReducedWord::parse("a"), o, 3) !=
          element_signature(ReducedWord::parse(""), o, 3));
  }

  TEST_CASE("serializations are stable") {
    Decider d = make("exact@(0)");
    CHECK(to_csv(growth_values(d, 2)) == "r,size\n0,1\n1,3\n2,5\n");
    const Ball b = ball(d, 1);
    const std::string dot = to_dot(b, d);
    CHECK(dot.find("graph ball {") != std::string::npos);
    CHECK(dot.find("exact@(0) radius 1") != std::string::npos);

    Decider s1 = make("exact@(012)");
    Decider s2 = make("exact@012(120)");
    const nlohmann::json j = to_json(metric(s1, s2, 2), s1.spec(), s2.spec());
    CHECK(j["kind"] == "upper_bound");
    CHECK(j["exact"] == false);
    CHECK(j["n"] == 2);
    CHECK(j["distance"] == 0.25);
    CHECK(j["spec1"] == "exact@(012)");
  }

  TEST_CASE("enumeration caps propagate as resource errors") {
    Decider d = make("alpha@(01)");
    EnumerationCaps caps;
    caps.max_words = 50;
    CHECK_THROWS_AS(ball(d, 4, caps), ResourceLimitExceeded);
    EnumerationCaps few;
    few.max_elements = 3;
    Decider d2 = make("alpha@(01)");
    CHECK_THROWS_AS(ball(d2, 3, few), ResourceLimitExceeded);
  }
}
