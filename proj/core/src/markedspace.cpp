#include "overgroup/markedspace.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <variant>

#include <nlohmann/json.hpp>

#include "overgroup/sections.hpp"

namespace ovg {

std::string element_signature(const ReducedWord& w, const Oracle& o, int depth) {
  std::string sig;
  sig.reserve(8 + (std::size_t{1} << depth) + 4);
  for (std::uint32_t img : level_permutation(w, o, 3)) {
    sig.push_back(static_cast<char>('0' + img));
  }

  DecomposeResult r = decompose(w, o, depth);
  if (const auto* ns = std::get_if<NotInStabilizer>(&r)) {
    // moved vertices are an invariant of the element, so the first offending
    // node is a sound discriminator even without section data
    sig.push_back('!');
    sig += std::to_string(ns->level);
    sig.push_back(':');
    sig += ns->vertex;
    return sig;
  }

  Oracle shifted = o;
  for (int l = 0; l < depth; ++l) shifted = shifted.shift();
  std::array<char, 8> coset_class{};
  for (std::uint8_t z = 0; z < 8; ++z) {
    std::uint8_t least = z;
    for (std::uint8_t t = 1; t < 8; ++t) {
      if (generator_trivial(KElement(t), shifted)) least = std::min<std::uint8_t>(least, z ^ t);
    }
    coset_class[z] = static_cast<char>('a' + least);
  }

  for (const ReducedWord& leaf : std::get<SectionTree>(r).levels.back()) {
    if (leaf.empty()) {
      sig.push_back(coset_class[0]);
    } else if (leaf.length() == 1) {
      Letter l = leaf.letters()[0];
      sig.push_back(l.is_a() ? 'z' : coset_class[l.kelem().bits()]);
    } else {
      throw std::invalid_argument("signature depth " + std::to_string(depth) +
                                  " leaves a section of length " + std::to_string(leaf.length()));
    }
  }
  return sig;
}

Ball ball(Decider& d, int radius, const EnumerationCaps& caps) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const Oracle& o = d.spec().oracle;
  const int sig_depth = std::max(3, alpha_depth(static_cast<std::size_t>(radius)));

  Ball b{d.spec(), radius, {}};
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::size_t visited = 0;
  for_each_reduced_word(static_cast<std::size_t>(radius), [&](const ReducedWord& w) {
    if (++visited > caps.max_words) {
      throw ResourceLimitExceeded("ball enumeration visited more than " +
                                  std::to_string(caps.max_words) + " words");
    }
    std::vector<std::size_t>& idxs = buckets[element_signature(w, o, sig_depth)];
    for (std::size_t i : idxs) {
      if (d.equal(w, b.representatives[i])) return true;  // known element
    }
    if (b.representatives.size() >= caps.max_elements) {
      throw ResourceLimitExceeded("ball exceeded " + std::to_string(caps.max_elements) +
                                  " elements");
    }
    idxs.push_back(b.representatives.size());
    b.representatives.push_back(w);
    return true;
  });
  return b;
}

std::vector<std::size_t> growth_values(Decider& d, int r_max, const EnumerationCaps& caps) {
  if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  const Ball full = ball(d, r_max, caps);
  std::vector<std::size_t> growth(static_cast<std::size_t>(r_max) + 1, 0);
  for (const ReducedWord& rep : full.representatives) ++growth[rep.length()];
  for (std::size_t r = 1; r < growth.size(); ++r) growth[r] += growth[r - 1];
  return growth;
}

namespace {

// Shortlex-least word on which the two identity predicates differ, if any
// appears within the length bound.
std::optional<ReducedWord> first_disagreement(Decider& s1, Decider& s2, std::size_t max_len,
                                              const EnumerationCaps& caps) {
  std::optional<ReducedWord> witness;
  std::size_t visited = 0;
  for_each_reduced_word(max_len, [&](const ReducedWord& w) {
    if (++visited > caps.max_words) {
      throw ResourceLimitExceeded("word enumeration visited more than " +
                                  std::to_string(caps.max_words) + " words");
    }
    if (s1.is_identity(w) != s2.is_identity(w)) {
      witness = w;
      return false;
    }
    return true;
  });
  return witness;
}

}  // namespace

BallsEqualResult balls_equal(Decider& s1, Decider& s2, int n, const EnumerationCaps& caps) {
  if (n < 0) throw std::invalid_argument("radius must be nonnegative");
  std::optional<ReducedWord> w = first_disagreement(s1, s2, 2 * static_cast<std::size_t>(n), caps);
  return {!w.has_value(), std::move(w)};
}

MetricResult metric(Decider& s1, Decider& s2, int max_r, const EnumerationCaps& caps) {
  if (max_r < 0) throw std::invalid_argument("max_r must be nonnegative");
  std::optional<ReducedWord> w =
      first_disagreement(s1, s2, 2 * static_cast<std::size_t>(max_r), caps);
  if (!w) return {false, max_r, std::ldexp(1.0, -max_r), std::nullopt};
  const int n = static_cast<int>((w->length() - 1) / 2);
  return {true, n, std::ldexp(1.0, -n), std::move(w)};
}

std::optional<ReducedWord> find_distinguishing_word(Decider& s1, Decider& s2, std::size_t max_len,
                                                    const EnumerationCaps& caps) {
  return first_disagreement(s1, s2, max_len, caps);
}

std::string to_csv(const std::vector<std::size_t>& growth) {
  std::ostringstream out;
  out << "r,size\n";
  for (std::size_t r = 0; r < growth.size(); ++r) out << r << ',' << growth[r] << '\n';
  return out.str();
}

std::string to_dot(const Ball& b, Decider& d) {
  const Oracle& o = b.spec.oracle;
  const int sig_depth = std::max(3, alpha_depth(static_cast<std::size_t>(b.radius) + 1));
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < b.representatives.size(); ++i) {
    buckets[element_signature(b.representatives[i], o, sig_depth)].push_back(i);
  }
  const auto resolve = [&](const ReducedWord& w) -> std::optional<std::size_t> {
    auto it = buckets.find(element_signature(w, o, sig_depth));
    if (it == buckets.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if (d.equal(w, b.representatives[i])) return i;
    }
    return std::nullopt;
  };

  std::ostringstream out;
  out << "graph ball {\n  graph [label=\"" << b.spec.str() << " radius " << b.radius
      << "\"];\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < b.representatives.size(); ++i) {
    const std::string s = b.representatives[i].str();
    out << "  n" << i << " [label=\"" << (s.empty() ? "e" : s) << "\"];\n";
  }
  for (std::size_t i = 0; i < b.representatives.size(); ++i) {
    for (std::uint8_t rank = 0; rank < 8; ++rank) {
      const Letter g = rank == 0 ? Letter::a() : Letter::k(KElement(rank));
      const ReducedWord neighbor = concat(b.representatives[i], ReducedWord::from_letter(g));
      const std::optional<std::size_t> j = resolve(neighbor);
      // generators are involutions: each undirected edge shows up from both
      // ends, so keep the copy seen from its smaller endpoint
      if (j && *j >= i) {
        out << "  n" << i << " -- n" << *j << " [label=\"" << int(rank) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const MetricResult& m, const GroupSpec& s1, const GroupSpec& s2) {
  nlohmann::json j{{"spec1", s1.str()},
                   {"spec2", s2.str()},
                   {"kind", m.exact ? "exact" : "upper_bound"},
                   {"exact", m.exact},
                   {"n", m.n},
                   {"distance", m.distance}};
  if (m.witness) j["witness"] = m.witness->str();
  return j;
}

}  // namespace ovg
