// Cayley balls, growth values, ball agreement, and the marked-group metric
// d = 2^-n over the space of 8-generated marked groups.
//
// Balls are enumerated over reduced words in shortlex order, deduplicating
// with the group's own equality decider, so each element keeps its shortest
// (then lexicographically least) representative.  Two marked groups have
// equal radius-n balls iff their identity predicates agree on every word of
// length <= 2n; the metric scans n upward and reports either the exact
// separation radius with a witness word or an upper bound at the cap.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "overgroup/wordproblem.hpp"

namespace ovg {

struct EnumerationCaps {
  std::size_t max_elements = std::size_t{1} << 20;  // ball representatives
  std::size_t max_words = std::size_t{1} << 22;     // words visited per enumeration
};

struct Ball {
  GroupSpec spec;
  int radius = 0;
  // Shortlex-sorted canonical representatives, one per group element.
  std::vector<ReducedWord> representatives;

  std::size_t size() const { return representatives.size(); }
};

Ball ball(Decider& d, int radius, const EnumerationCaps& caps = {});

// |B(0)| ... |B(r_max)| from a single enumeration.
std::vector<std::size_t> growth_values(Decider& d, int r_max, const EnumerationCaps& caps = {});

struct BallsEqualResult {
  bool equal;
  // Shortest (then lex-least) word on which the identity predicates differ.
  std::optional<ReducedWord> witness;
};
BallsEqualResult balls_equal(Decider& s1, Decider& s2, int n, const EnumerationCaps& caps = {});

struct MetricResult {
  // true: balls agree at radius n and differ at n+1, distance == 2^-n with a
  // witness of length <= 2(n+1).  false: agreement through the cap n == R,
  // distance is only an upper bound 2^-R.
  bool exact = false;
  int n = 0;
  double distance = 1.0;
  std::optional<ReducedWord> witness;
};
MetricResult metric(Decider& s1, Decider& s2, int max_r, const EnumerationCaps& caps = {});

// Shortest (then lex-least) reduced word of length <= max_len with differing
// verdicts, or nullopt when the deciders agree that far.
std::optional<ReducedWord> find_distinguishing_word(Decider& s1, Decider& s2,
                                                    std::size_t max_len,
                                                    const EnumerationCaps& caps = {});

// Dedup prefilter for ball enumeration: a byte string equal group elements
// always share.  Components depend only on the exact group of the oracle
// (level-3 action; depth-`depth` section letters classified modulo the
// subgroup of portrait-trivial K-elements), and equality in every modified
// group refines exact equality, so the filter is sound for all families.
// `depth` must reduce the words under comparison to single letters.
std::string element_signature(const ReducedWord& w, const Oracle& o, int depth);

std::string to_csv(const std::vector<std::size_t>& growth);
// Labeled undirected Cayley graph of the ball; needs the decider to resolve
// edge endpoints to representatives.  Deterministic node and edge order.
std::string to_dot(const Ball& b, Decider& d);
nlohmann::json to_json(const MetricResult& m, const GroupSpec& s1, const GroupSpec& s2);

}  // namespace ovg
