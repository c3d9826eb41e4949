#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "overgroup/oracle.hpp"
#include "overgroup/sections.hpp"
#include "overgroup/words.hpp"

using namespace ovg;

namespace {
bool swaps(KElement k, Symbol s) { return pi0(k, s) == FirstLevelAction::swap; }
}  // namespace

TEST_SUITE("sections") {
  TEST_CASE("pi0 matches the per-symbol functional table") {
    // symbol 0: d, b~, c~ act trivially on the first level
    CHECK_FALSE(swaps(gen::d, Symbol::zero));
    CHECK_FALSE(swaps(gen::bt, Symbol::zero));
    CHECK_FALSE(swaps(gen::ct, Symbol::zero));
    CHECK(swaps(gen::b, Symbol::zero));
    CHECK(swaps(gen::c, Symbol::zero));
    CHECK(swaps(gen::x, Symbol::zero));
    CHECK(swaps(gen::dt, Symbol::zero));
    // symbol 1: c, b~, d~ act trivially
    CHECK_FALSE(swaps(gen::c, Symbol::one));
    CHECK_FALSE(swaps(gen::bt, Symbol::one));
    CHECK_FALSE(swaps(gen::dt, Symbol::one));
    CHECK(swaps(gen::b, Symbol::one));
    CHECK(swaps(gen::d, Symbol::one));
    CHECK(swaps(gen::x, Symbol::one));
    CHECK(swaps(gen::ct, Symbol::one));
    // symbol 2: b, c~, d~ act trivially
    CHECK_FALSE(swaps(gen::b, Symbol::two));
    CHECK_FALSE(swaps(gen::ct, Symbol::two));
    CHECK_FALSE(swaps(gen::dt, Symbol::two));
    CHECK(swaps(gen::c, Symbol::two));
    CHECK(swaps(gen::d, Symbol::two));
    CHECK(swaps(gen::x, Symbol::two));
    CHECK(swaps(gen::bt, Symbol::two));
  }

  TEST_CASE("level-1 split of single letters and short words") {
    const Oracle o0 = Oracle::parse("(0)");
    auto [bl, br] = split(ReducedWord::parse("b"), o0);
    CHECK(bl.str() == "a");
    CHECK(br.str() == "b");
    auto [dl, dr] = split(ReducedWord::parse("d"), o0);
    CHECK(dl.empty());
    CHECK(dr.str() == "d");
    auto [al, ar] = split(ReducedWord::parse("abab"), Oracle::parse("(01)"));
    CHECK(al.str() == "ba");
    CHECK(ar.str() == "ab");
  }

  TEST_CASE("split requires even a-parity") {
    CHECK_THROWS_AS(split(ReducedWord::parse("a"), Oracle::parse("(0)")), std::invalid_argument);
    CHECK_THROWS_AS(split(ReducedWord::parse("ax"), Oracle::parse("(0)")), std::invalid_argument);
    CHECK(even_a_parity(ReducedWord::parse("abab")));
    CHECK(even_a_parity(ReducedWord::parse("aba")));  // two a letters
    CHECK_FALSE(even_a_parity(ReducedWord::parse("ab")));
  }

  TEST_CASE("decompose produces the section tree or the blocking vertex") {
    const Oracle o = Oracle::parse("(0)");
    const ReducedWord v1 = ReducedWord::parse("xadax");
    const DecomposeResult res = decompose(v1, o, 1);
    const SectionTree* tree = std::get_if<SectionTree>(&res);
    REQUIRE(tree != nullptr);
    CHECK(tree->at("").str() == "xadax");
    CHECK(tree->at("0").str() == "ada");
    CHECK(tree->at("1").empty());

    const DecomposeResult blocked = decompose(ReducedWord::parse("a"), o, 1);
    const NotInStabilizer* ns = std::get_if<NotInStabilizer>(&blocked);
    REQUIRE(ns != nullptr);
    CHECK(ns->level == 0);
    CHECK(ns->vertex == "");

    // the blocking vertex one level down: section at 0 is "ba" (odd parity)
    const DecomposeResult deep = decompose(ReducedWord::parse("abab"), Oracle::parse("(01)"), 2);
    const NotInStabilizer* ns2 = std::get_if<NotInStabilizer>(&deep);
    REQUIRE(ns2 != nullptr);
    CHECK(ns2->level == 1);
    CHECK(ns2->vertex == "0");
  }

  TEST_CASE("alpha_depth is the ceiling of log2") {
    CHECK(alpha_depth(0) == 0);
    CHECK(alpha_depth(1) == 0);
    CHECK(alpha_depth(2) == 1);
    CHECK(alpha_depth(3) == 2);
    CHECK(alpha_depth(4) == 2);
    CHECK(alpha_depth(5) == 3);
    CHECK(alpha_depth(8) == 3);
    CHECK(alpha_depth(9) == 4);
    CHECK(alpha_depth(16) == 4);
    CHECK(alpha_depth(17) == 5);
  }

  TEST_CASE("level permutations of the basic letters") {
    const Oracle o0 = Oracle::parse("(0)");
    CHECK(level_permutation(ReducedWord::parse("a"), o0, 1) ==
          std::vector<std::uint32_t>{1, 0});
    CHECK(level_permutation(ReducedWord::parse("a"), o0, 2) ==
          std::vector<std::uint32_t>{2, 3, 0, 1});
    // K letters stabilize the first level; their swap sections act below it
    CHECK(level_permutation(ReducedWord::parse("b"), o0, 1) ==
          std::vector<std::uint32_t>{0, 1});
    CHECK(level_permutation(ReducedWord::parse("b"), o0, 2) ==
          std::vector<std::uint32_t>{1, 0, 2, 3});
    CHECK(level_permutation(ReducedWord::parse("d"), o0, 4) ==
          level_permutation(ReducedWord::parse(""), o0, 4));
    CHECK(level_permutation(ReducedWord::parse("ab"), o0, 0) ==
          std::vector<std::uint32_t>{0});
  }

  TEST_CASE("nucleus accepts any depth whose sections are single letters") {
    const Oracle o = Oracle::parse("(0)");
    const ReducedWord v1 = ReducedWord::parse("xadax");
    // depth 1 leaves the 3-letter section "ada"
    CHECK_THROWS_AS(nucleus_at(v1, o, 1), std::invalid_argument);
    // depth 2 already contracts this word, below alpha_depth(5) == 3
    const NucleusResult res = nucleus_at(v1, o, 2);
    const Nucleus* nuc = std::get_if<Nucleus>(&res);
    REQUIRE(nuc != nullptr);
    REQUIRE(nuc->at("00").has_value());
    CHECK(nuc->at("00")->kelem() == gen::d);
    CHECK_FALSE(nuc->at("01").has_value());
    CHECK_FALSE(nuc->at("10").has_value());
    CHECK_FALSE(nuc->at("11").has_value());
  }

  TEST_CASE("nucleus throws when the requested depth leaves long sections") {
    const Oracle o = Oracle::parse("(01)");
    CHECK_THROWS_AS(nucleus_at(ReducedWord::parse("abab"), o, 0), std::invalid_argument);
  }

  TEST_CASE("nucleus of the depth-4 separating witness") {
    const Oracle o = Oracle::parse("121(0)");
    const ReducedWord w = ReducedWord::parse("BabaBabaBabaBaba");
    const NucleusResult res = nucleus_at(w, o, 4);
    const Nucleus* nuc = std::get_if<Nucleus>(&res);
    REQUIRE(nuc != nullptr);
    CHECK(nuc->depth == 4);
    REQUIRE(nuc->entries.size() == 16);
    std::size_t letters = 0, empties = 0;
    for (const auto& e : nuc->entries) {
      if (e) {
        ++letters;
        CHECK_FALSE(e->is_a());
        CHECK(e->kelem() == gen::bt);
      } else {
        ++empties;
      }
    }
    // the cascade concentrates the K-letter on the all-ones side
    CHECK(letters == 4);
    CHECK(empties == 12);
    for (const char* path : {"1001", "1011", "1101", "1111"}) {
      REQUIRE(nuc->at(path).has_value());
      CHECK(nuc->at(path)->kelem() == gen::bt);
    }
    CHECK_FALSE(nuc->at("0000").has_value());
    CHECK_FALSE(nuc->at("1000").has_value());
  }

  TEST_CASE("section JSON and DOT carry the word, oracle and entries") {
    const Oracle o = Oracle::parse("(0)");
    const ReducedWord w = ReducedWord::parse("xadax");
    const DecomposeResult res = decompose(w, o, 1);
    const SectionTree& tree = std::get<SectionTree>(res);
    const nlohmann::json j = to_json(tree, w, o);
    CHECK(j["word"] == "xadax");
    CHECK(j["oracle"] == "(0)");
    CHECK(j["depth"] == 1);
    CHECK(j["sections"][""] == "xadax");
    CHECK(j["sections"]["0"] == "ada");
    CHECK(j["sections"]["1"] == "");
    CHECK(to_dot(tree).find("digraph") != std::string::npos);

    const NucleusResult nres = nucleus_at(w, o, 3);
    const Nucleus& nuc = std::get<Nucleus>(nres);
    const nlohmann::json nj = to_json(nuc, w, o);
    CHECK(nj["entries"].size() == 8);
    CHECK(to_dot(nuc).find("digraph") != std::string::npos);
  }
}
