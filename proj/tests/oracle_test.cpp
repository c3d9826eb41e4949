#include "doctest.h"

#include <stdexcept>

#include "overgroup/oracle.hpp"

using namespace ovg;

TEST_SUITE("oracle") {
  TEST_CASE("canonical forms absorb prefixes and primitive periods") {
    CHECK(Oracle::parse("10(0)").str() == "1(0)");
    CHECK(Oracle::parse("0(00)").str() == "(0)");
    CHECK(Oracle::parse("(0101)").str() == "(01)");
    CHECK(Oracle::parse("1(01)").str() == "(10)");
    CHECK(Oracle::parse("012(120)").str() == "012(120)");
    CHECK(Oracle::parse("121(0)").str() == "121(0)");
    CHECK(Oracle::parse("01(10)").str() == "01(10)");
  }

  TEST_CASE("canonicalization preserves the symbol stream") {
    const Oracle raw = Oracle::parse("100(00)");
    const Oracle canon = Oracle::parse("1(0)");
    CHECK(raw == canon);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(raw.symbol_at(n) == canon.symbol_at(n));
  }

  TEST_CASE("symbol_at is 1-based") {
    const Oracle o = Oracle::parse("121(0)");
    CHECK_THROWS_AS(o.symbol_at(0), std::invalid_argument);
    CHECK(to_char(o.symbol_at(1)) == '1');
    CHECK(to_char(o.symbol_at(2)) == '2');
    CHECK(to_char(o.symbol_at(3)) == '1');
    CHECK(to_char(o.symbol_at(4)) == '0');
    CHECK(to_char(o.symbol_at(100)) == '0');
  }

  TEST_CASE("shift drops the head") {
    CHECK(Oracle::parse("(01)").shift().str() == "(10)");
    CHECK(Oracle::parse("121(0)").shift().str() == "21(0)");
    CHECK(Oracle::parse("(0)").shift().str() == "(0)");
    CHECK(Oracle::parse("(012)").shift().str() == "(120)");
  }

  TEST_CASE("classify sorts oracles into the three recurrence classes") {
    const OracleClass c0 = classify(Oracle::parse("(012)"));
    CHECK(c0.cls == OmegaClass::omega0);
    CHECK(c0.infinite_symbols.size() == 3);

    const OracleClass c1 = classify(Oracle::parse("(01)"));
    CHECK(c1.cls == OmegaClass::omega1);
    REQUIRE(c1.infinite_symbols.size() == 2);
    CHECK(c1.infinite_symbols[0] == Symbol::zero);
    CHECK(c1.infinite_symbols[1] == Symbol::one);
    CHECK(c1.tail_start == 0);

    const OracleClass c2 = classify(Oracle::parse("121(0)"));
    CHECK(c2.cls == OmegaClass::omega2);
    REQUIRE(c2.infinite_symbols.size() == 1);
    CHECK(c2.infinite_symbols[0] == Symbol::zero);
    CHECK(c2.tail_start == 3);

    CHECK(classify(Oracle::parse("(0)")).cls == OmegaClass::omega2);
  }

  TEST_CASE("last_occurrence distinguishes finite from recurring symbols") {
    CHECK(last_occurrence(Oracle::parse("121(0)"), Symbol::two) == 2);
    CHECK(last_occurrence(Oracle::parse("121(0)"), Symbol::one) == 3);
    CHECK(last_occurrence(Oracle::parse("121(0)"), Symbol::zero) == infinitely_often);
    CHECK(last_occurrence(Oracle::parse("(012)"), Symbol::two) == infinitely_often);
    CHECK(last_occurrence(Oracle::parse("(0)"), Symbol::two) == 0);
    CHECK(last_occurrence(Oracle::parse("1(0)"), Symbol::one) == 1);
  }

  TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Oracle::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Oracle::parse("012"), std::invalid_argument);
    CHECK_THROWS_AS(Oracle::parse("()"), std::invalid_argument);
    CHECK_THROWS_AS(Oracle::parse("(0)x"), std::invalid_argument);
    CHECK_THROWS_AS(Oracle::parse("(3)"), std::invalid_argument);
    CHECK_THROWS_AS(symbol_from_char('9'), std::invalid_argument);
  }
}
