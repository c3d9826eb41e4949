#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "overgroup/words.hpp"

using namespace ovg;

TEST_SUITE("words") {
  TEST_CASE("K products follow the XOR structure") {
    CHECK(kmul(gen::b, gen::c) == gen::d);
    CHECK(kmul(gen::b, gen::bt) == gen::x);
    CHECK(kmul(gen::d, gen::bt) == gen::ct);
    CHECK(kmul(gen::x, gen::x).is_identity());
    CHECK(kmul(gen::b, kmul(gen::c, gen::d)).is_identity());
  }

  TEST_CASE("reduction cancels involutions and folds K runs") {
    CHECK(ReducedWord::parse("bcb").str() == "c");
    CHECK(ReducedWord::parse("BCB").str() == "C");
    CHECK(ReducedWord::parse("bx").str() == "B");
    CHECK(ReducedWord::parse("abba").str() == "");
    CHECK(ReducedWord::parse("aa").str() == "");
    CHECK(ReducedWord::parse("adda").str() == "");
    CHECK(ReducedWord::parse("ada").str() == "ada");
    CHECK(ReducedWord::parse("bcd").empty());
    CHECK(ReducedWord::parse("axbac").str() == "aBac");
  }

  TEST_CASE("parse ignores whitespace and rejects unknown letters") {
    CHECK(ReducedWord::parse(" a b\tx ") == ReducedWord::parse("abx"));
    CHECK(ReducedWord::parse("").empty());
    CHECK_THROWS_AS(ReducedWord::parse("abe"), std::invalid_argument);
    CHECK_THROWS_AS(ReducedWord::parse("A"), std::invalid_argument);
  }

  TEST_CASE("inverse of a word over involutions is its reverse") {
    const ReducedWord w = ReducedWord::parse("abacad");
    CHECK(w.inverted().str() == "dacaba");
    CHECK(concat(w, w.inverted()).empty());
    CHECK(concat(w.inverted(), w).empty());
  }

  TEST_CASE("powers and commutators reduce as expected") {
    const ReducedWord ad = ReducedWord::parse("ad");
    CHECK(ad.pow(0).empty());
    CHECK(ad.pow(1) == ad);
    CHECK(ad.pow(4).str() == "adadadad");
    CHECK(commutator(ReducedWord::parse("b"), ReducedWord::parse("c")).empty());
    CHECK(conjugate(ReducedWord::parse("d"), ReducedWord::parse("a")).str() == "ada");
  }

  TEST_CASE("word-count closed form and enumeration order") {
    CHECK(count_reduced_words(0) == 1);
    CHECK(count_reduced_words(1) == 8);
    CHECK(count_reduced_words(2) == 14);
    CHECK(count_reduced_words(3) == 56);
    CHECK(count_reduced_words(4) == 98);
    CHECK(count_reduced_words_upto(6) == 1255);
    CHECK(count_reduced_words_upto(8) == 8801);

    std::vector<std::string> first;
    for_each_reduced_word(2, [&](const ReducedWord& w) {
      first.push_back(w.str());
      return first.size() < 12;
    });
    const std::vector<std::string> want = {"",  "a",  "b",  "c",  "d",  "x",
                                           "B", "C",  "D",  "ab", "ac", "ad"};
    CHECK(first == want);
  }

  TEST_CASE("enumeration respects the early-stop protocol") {
    std::size_t seen = 0;
    const bool completed = for_each_reduced_word(4, [&](const ReducedWord&) {
      return ++seen < 5;
    });
    CHECK_FALSE(completed);
    CHECK(seen == 5);
    CHECK(for_each_reduced_word(1, [](const ReducedWord&) { return true; }));
  }

  TEST_CASE("shortlex order sorts by length first, then generator rank") {
    CHECK(shortlex_less(ReducedWord::parse(""), ReducedWord::parse("a")));
    CHECK(shortlex_less(ReducedWord::parse("D"), ReducedWord::parse("ab")));
    CHECK(shortlex_less(ReducedWord::parse("a"), ReducedWord::parse("b")));
    CHECK(shortlex_less(ReducedWord::parse("x"), ReducedWord::parse("B")));
    CHECK_FALSE(shortlex_less(ReducedWord::parse("ab"), ReducedWord::parse("ab")));
  }

  TEST_CASE("letter accessors") {
    CHECK(Letter::a().is_a());
    CHECK(Letter::k(gen::bt).ch() == 'B');
    CHECK_THROWS_AS(Letter::k(KElement(0)), std::invalid_argument);
    const ReducedWord w = ReducedWord::parse("aB");
    CHECK(w.a_count() == 1);
    CHECK(w.length() == 2);
    CHECK(w.letters()[1].kelem() == gen::bt);
  }
}
