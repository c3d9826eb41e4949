// Level-1 decomposition and its iteration down the binary rooted tree.
//
// Every K-letter k acts as (pi0(k, w1), k'), where pi0 is the first-level
// action ('a' or trivial) selected by the oracle's first symbol and k' is the
// same-named letter over the shifted oracle (the self-similar copy lives in
// the right subtree); `a` swaps the subtrees.  Splitting a word and reducing
// both halves shrinks it: depth-n sections of W have length at most
// |W|/2^n + 1 - 1/2^n, which is what makes the word-problem recursion and
// nucleus extraction terminate.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "overgroup/oracle.hpp"
#include "overgroup/words.hpp"

namespace ovg {

enum class FirstLevelAction : std::uint8_t { trivial, swap };

// The first-coordinate contribution of k at a level whose oracle symbol is s:
// a GF(2) functional of k's bits (mask 111 at symbol 0, 101 at 1, 110 at 2).
FirstLevelAction pi0(KElement k, Symbol s);

bool even_a_parity(const ReducedWord& w);

// w = (left, right) · swap^{swapped}: the decomposition of any word, with the
// root swap factored out.  left/right are the reduced sections at input
// vertices 0/1; both live over the shifted oracle.
struct LevelOneSplit {
  ReducedWord left;
  ReducedWord right;
  bool swapped;
};
LevelOneSplit split_with_parity(const ReducedWord& w, const Oracle& o);

// The pair (w|0, w|1) for a word in the level-1 stabilizer; throws
// std::invalid_argument when w has an odd number of a's.
std::pair<ReducedWord, ReducedWord> split(const ReducedWord& w, const Oracle& o);

// First node (scanning level by level, left to right) whose word moves the
// subtrees; a first-class outcome, since the modified deciders read it as a
// negative answer.
struct NotInStabilizer {
  int level = 0;
  std::string vertex;  // bit-string address, "" for the root
};

// Full table of sections to a given depth.  levels[l] holds 2^l reduced
// words; the word at bit string p (first tree coordinate = leftmost bit) is
// levels[p.size()][binary value of p].
struct SectionTree {
  int depth = 0;
  std::vector<std::vector<ReducedWord>> levels;

  const ReducedWord& at(std::string_view path) const;
};

using DecomposeResult = std::variant<SectionTree, NotInStabilizer>;
DecomposeResult decompose(const ReducedWord& w, const Oracle& o, int depth);

// Depth-n entry map with every entry empty or a single letter.
struct Nucleus {
  int depth = 0;
  std::vector<std::optional<Letter>> entries;  // size 2^depth, path = MSB-first bits

  const std::optional<Letter>& at(std::string_view path) const;
};

using NucleusResult = std::variant<Nucleus, NotInStabilizer>;

// Sections at the given depth, which must reduce every entry to at most one
// letter (depth >= alpha_depth(w.length()) always suffices; some words get
// there sooner).  Throws std::invalid_argument when entries remain longer.
NucleusResult nucleus_at(const ReducedWord& w, const Oracle& o, int depth);

// ceil(log2(max(len, 1))): the depth at which the length bound forces every
// section of a word of that length down to a single letter.
int alpha_depth(std::size_t word_length);

// Image of every level-`level` vertex (paths as MSB-first bit strings,
// listed in vertex order) under the word's tree action, evaluated directly
// by folding letter actions; no splitting involved.
std::vector<std::uint32_t> level_permutation(const ReducedWord& w, const Oracle& o, int level);

nlohmann::json to_json(const SectionTree& t, const ReducedWord& w, const Oracle& o);
nlohmann::json to_json(const Nucleus& n, const ReducedWord& w, const Oracle& o);
nlohmann::json to_json(const NotInStabilizer& n, const ReducedWord& w, const Oracle& o);
std::string to_dot(const SectionTree& t);
std::string to_dot(const Nucleus& n);

}  // namespace ovg
