#include "doctest.h"

#include <stdexcept>
#include <string>

#include "overgroup/constructions.hpp"
#include "overgroup/oracle.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

using namespace ovg;

TEST_SUITE("constructions") {
  TEST_CASE("v_word normal forms for both signs") {
    CHECK(v_word(gen::d, 0).str() == "d");
    CHECK(v_word(gen::d, 1).str() == "xadax");
    CHECK(v_word(gen::d, 2).str() == "xaxadaxax");
    CHECK(v_word(gen::d, -1).str() == "ada");
    CHECK(v_word(gen::d, -2).str() == "axadaxa");
    CHECK(v_word(gen::bt, 1).str() == "xaBax");
    CHECK(v_word(gen::d, 3).length() == 13);
    CHECK(v_word(gen::d, -3).length() == 11);
  }

  TEST_CASE("substitutions act literally on normal forms") {
    for (long long n = -3; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(xi(1, v_word(gen::d, n), gen::d) == v_word(gen::d, 2 * n));
      CHECK(xi(0, v_word(gen::d, n), gen::d) == v_word(gen::d, -2 * n - 1));
      CHECK(xi(1, v_word(gen::ct, n), gen::ct) == v_word(gen::ct, 2 * n));
    }
    CHECK(xi(0, ReducedWord::parse("a"), gen::d).str() == "x");
    CHECK(xi(0, ReducedWord::parse("x"), gen::d).str() == "axa");
    CHECK(xi(1, ReducedWord::parse("a"), gen::d).str() == "axa");
  }

  TEST_CASE("substitution input validation") {
    CHECK_THROWS_AS(xi(2, ReducedWord::parse("a"), gen::d), std::invalid_argument);
    CHECK_THROWS_AS(xi(0, ReducedWord::parse("ab"), gen::d), std::invalid_argument);
    CHECK_THROWS_AS(xi(0, ReducedWord::parse("a"), gen::x), std::invalid_argument);
    CHECK_THROWS_AS(xi(0, ReducedWord::parse("a"), KElement(0)), std::invalid_argument);
    // the seed letter itself is part of the {a, x, y} alphabet
    CHECK_NOTHROW(xi(0, ReducedWord::parse("aBax"), gen::bt));
    CHECK_THROWS_AS(xi(0, ReducedWord::parse("aBax"), gen::d), std::invalid_argument);
  }

  TEST_CASE("vertex words fold the path through the substitutions") {
    CHECK(V_word(gen::d, "").str() == "d");
    CHECK(V_word(gen::d, "1") == v_word(gen::d, 0));
    CHECK(V_word(gen::d, "0") == v_word(gen::d, -1));
    CHECK(V_word(gen::d, "00") == v_word(gen::d, 1));
    CHECK(V_word(gen::d, "010") == v_word(gen::d, 3));
    CHECK(V_word(gen::d, "110") == v_word(gen::d, -4));
    CHECK_THROWS_AS(V_word(gen::d, "012"), std::invalid_argument);
    CHECK_THROWS_AS(V_word(gen::d, std::string(21, '0')), ResourceLimitExceeded);
  }

  TEST_CASE("vertex indices satisfy the two descent rules") {
    CHECK(v_index("") == 0);
    CHECK(v_index("1") == 0);
    CHECK(v_index("0") == -1);
    CHECK(v_index("010") == 3);
    CHECK(v_index("110") == -4);
    // '1' doubles, '0' maps k to -2k-1, folded right to left
    CHECK(v_index("01") == -1);
    CHECK(v_index("10") == -2);
    CHECK_THROWS_AS(v_index("2"), std::invalid_argument);
    CHECK_THROWS_AS(v_index(std::string(61, '1')), std::invalid_argument);
  }

  TEST_CASE("omega2 shape extraction around the last excluded run") {
    const auto shape = omega2_shape(Oracle::parse("121(0)"), Symbol::zero, Symbol::one);
    REQUIRE(shape.has_value());
    CHECK(shape->ell == Symbol::two);
    CHECK(shape->kappa == 1);
    CHECK(shape->tail == Symbol::zero);
    REQUIRE(shape->head.size() == 1);
    CHECK(shape->head[0] == Symbol::one);
    REQUIRE(shape->eta.size() == 1);
    CHECK(shape->eta[0] == Symbol::one);

    const auto degenerate = omega2_shape(Oracle::parse("2(0)"), Symbol::zero, Symbol::one);
    REQUIRE(degenerate.has_value());
    CHECK(degenerate->head.empty());
    CHECK(degenerate->kappa == 1);

    CHECK_FALSE(omega2_shape(Oracle::parse("(0)"), Symbol::zero, Symbol::one).has_value());
    CHECK_THROWS_AS(omega2_shape(Oracle::parse("(012)"), Symbol::zero, Symbol::one),
                    std::invalid_argument);
    CHECK_THROWS_AS(omega2_shape(Oracle::parse("1(2)"), Symbol::zero, Symbol::one),
                    std::invalid_argument);
  }

  TEST_CASE("separating witnesses for the three oracle shapes") {
    const WijResult main = w_ij(Oracle::parse("121(0)"), Symbol::zero, Symbol::one);
    CHECK(main.word.str() == "BabaBabaBabaBaba");
    CHECK_FALSE(main.degenerate);

    const WijResult deg = w_ij(Oracle::parse("2(0)"), Symbol::zero, Symbol::one);
    CHECK(deg.word.str() == "BaBaBaBa");
    CHECK(deg.degenerate);

    const WijResult absent = w_ij(Oracle::parse("(0)"), Symbol::zero, Symbol::one);
    CHECK(absent.word.str() == "B");
    CHECK_FALSE(absent.degenerate);

    const WijResult other = w_ij(Oracle::parse("1(0)"), Symbol::two, Symbol::zero);
    CHECK(other.word.str() == "CaCaCaCa");
    CHECK(other.degenerate);
  }

  TEST_CASE("the witness separates its beta family from the others") {
    const Oracle o = Oracle::parse("121(0)");
    const WijResult w = w_ij(o, Symbol::zero, Symbol::one);
    Decider b01(GroupSpec::parse("beta-01@121(0)"));
    Decider b20(GroupSpec::parse("beta-20@121(0)"));
    Decider al(GroupSpec::parse("alpha@121(0)"));
    Decider ex(GroupSpec::parse("exact@121(0)"));
    CHECK(b01.is_identity(w.word));
    CHECK_FALSE(b20.is_identity(w.word));
    CHECK_FALSE(al.is_identity(w.word));
    CHECK(ex.is_identity(w.word));  // beta-trivial words are exact-trivial
  }

  TEST_CASE("the letterwise retraction and spine-letter predicate") {
    CHECK(f_map(ReducedWord::parse("x")).str() == "b");
    CHECK(f_map(ReducedWord::parse("B")).empty());
    CHECK(f_map(ReducedWord::parse("C")).str() == "d");
    CHECK(f_map(ReducedWord::parse("D")).str() == "c");
    CHECK(f_map(ReducedWord::parse("aCa")).str() == "ada");
    CHECK(f_map(ReducedWord::parse("xB")).str() == "b");
    CHECK(f_map(ReducedWord::parse("aBa")).empty());

    CHECK(is_spine_letter(gen::d, Oracle::parse("(0)")));
    CHECK_FALSE(is_spine_letter(gen::b, Oracle::parse("(0)")));
    CHECK_FALSE(is_spine_letter(gen::d, Oracle::parse("(012)")));
    CHECK_FALSE(is_spine_letter(KElement(0), Oracle::parse("(0)")));
  }
}
