#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "overgroup/constructions.hpp"
#include "overgroup/oracle.hpp"
#include "overgroup/sections.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

namespace ogt {

using namespace ovg;

namespace {

CheckResult pass(std::string id, std::string detail) { return {std::move(id), true, std::move(detail)}; }
CheckResult fail(std::string id, std::string detail) { return {std::move(id), false, std::move(detail)}; }

Decider make(const std::string& spec_text) { return Decider(GroupSpec::parse(spec_text)); }

ReducedWord random_reduced_word(std::mt19937& rng, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  bool k_next = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  std::uniform_int_distribution<int> kdist(1, 7);
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(k_next ? Letter::k(KElement(static_cast<std::uint8_t>(kdist(rng))))
                             : Letter::a());
    k_next = !k_next;
  }
  return ReducedWord::reduce(letters);
}

bool is_identity_perm(const std::vector<std::uint32_t>& p) {
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// Permutation induced on level-`level` vertices by the section tree built
// from unconditional level-1 splits: at each node the input bit is flipped by
// that node's a-parity and descent follows the input bit.  This is the
// "internal a-parities" evaluation the direct fold must agree with.
std::vector<std::uint32_t> split_tree_permutation(const ReducedWord& w, const Oracle& o,
                                                  int level) {
  std::vector<std::vector<ReducedWord>> levels{{w}};
  Oracle cur = o;
  for (int l = 0; l < level; ++l) {
    std::vector<ReducedWord> next;
    next.reserve(levels.back().size() * 2);
    for (const ReducedWord& word : levels.back()) {
      LevelOneSplit s = split_with_parity(word, cur);
      next.push_back(std::move(s.left));
      next.push_back(std::move(s.right));
    }
    levels.push_back(std::move(next));
    cur = cur.shift();
  }
  std::vector<std::uint32_t> img(std::size_t{1} << level);
  for (std::uint32_t v = 0; v < img.size(); ++v) {
    std::uint32_t node = 0, out = 0;
    for (int l = 0; l < level; ++l) {
      const std::uint32_t b = (v >> (level - 1 - l)) & 1u;
      const std::uint32_t p = levels[static_cast<std::size_t>(l)][node].a_count() % 2;
      out = (out << 1) | (b ^ p);
      node = node * 2 + b;
    }
    img[v] = out;
  }
  return img;
}

Oracle shifted_by(Oracle o, int n) {
  for (int i = 0; i < n; ++i) o = o.shift();
  return o;
}

std::string plural(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

// ---------------------------------------------------------------- suites --

CheckResult check_k_table(const VerifyConfig&) {
  // Independent copy of the expected 7x7 product table, rows/columns in
  // generator order b c d x B C D; '1' marks the identity.
  static constexpr std::array<const char*, 7> table = {
      "1dcBxDC", "d1bCDxB", "cb1DCBx", "BCD1bcd", "xDCb1dc", "DxBcd1b", "CBxdcb1"};
  int mismatches = 0;
  std::string first;
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const KElement prod = kmul(KElement(static_cast<std::uint8_t>(i)),
                                 KElement(static_cast<std::uint8_t>(j)));
      const char want = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      const char got = prod.is_identity() ? '1' : prod.letter_char();
      if (want != got) {
        if (++mismatches == 1) {
          first = std::string("row ") + KElement(static_cast<std::uint8_t>(i)).letter_char() +
                  " col " + KElement(static_cast<std::uint8_t>(j)).letter_char() + ": got " + got +
                  ", want " + want;
        }
      }
    }
  }
  if (mismatches > 0) return fail("k-table", first + " (" + plural(mismatches, "mismatch") + ")");
  return pass("k-table", "all 49 products match the expected table");
}

CheckResult check_k_axioms(const VerifyConfig&) {
  for (int i = 0; i < 8; ++i) {
    const KElement ki(static_cast<std::uint8_t>(i));
    if (!(kmul(ki, KElement(0)) == ki)) return fail("k-axioms", "identity fails");
    if (!kmul(ki, ki).is_identity()) return fail("k-axioms", "self-inverse fails");
    for (int j = 0; j < 8; ++j) {
      const KElement kj(static_cast<std::uint8_t>(j));
      if (!(kmul(ki, kj) == kmul(kj, ki))) return fail("k-axioms", "commutativity fails");
      for (int l = 0; l < 8; ++l) {
        const KElement kl(static_cast<std::uint8_t>(l));
        if (!(kmul(kmul(ki, kj), kl) == kmul(ki, kmul(kj, kl)))) {
          return fail("k-axioms", "associativity fails");
        }
      }
    }
  }
  return pass("k-axioms", "elementary abelian of order 8 (identity, involutions, 8^3 associativity)");
}

CheckResult check_reduce_idempotent(const VerifyConfig& config) {
  // exhaustive over short raw letter strings, randomized beyond
  const std::array<Letter, 8> alphabet = {Letter::a(),           Letter::k(KElement(1)),
                                          Letter::k(KElement(2)), Letter::k(KElement(3)),
                                          Letter::k(KElement(4)), Letter::k(KElement(5)),
                                          Letter::k(KElement(6)), Letter::k(KElement(7))};
  std::size_t tested = 0;
  for (std::size_t len = 0; len <= 5; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Letter> raw;
      raw.reserve(len);
      for (std::size_t i : idx) raw.push_back(alphabet[i]);
      const ReducedWord once = ReducedWord::reduce(raw);
      if (ReducedWord::reduce(once.letters()) != once) {
        return fail("reduce-idempotent", "raw word of length " + std::to_string(len));
      }
      ++tested;
      std::size_t p = 0;
      while (p < len && idx[p] == 7) idx[p++] = 0;
      if (p == len) break;
      ++idx[p];
    }
  }
  std::mt19937 rng(config.seed + 11);
  std::uniform_int_distribution<int> ldist(6, 12);
  std::uniform_int_distribution<int> cdist(0, 7);
  for (int t = 0; t < 4000; ++t) {
    const int len = ldist(rng);
    std::vector<Letter> raw;
    raw.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) raw.push_back(alphabet[static_cast<std::size_t>(cdist(rng))]);
    const ReducedWord once = ReducedWord::reduce(raw);
    if (ReducedWord::reduce(once.letters()) != once) {
      return fail("reduce-idempotent", "random raw word of length " + std::to_string(len));
    }
    ++tested;
  }
  return pass("reduce-idempotent", plural(tested, "raw word") + " (exhaustive <= 5, random 6..12)");
}

CheckResult check_inverse_cancels(const VerifyConfig& config) {
  std::size_t tested = 0;
  std::string bad;
  for_each_reduced_word(config.len_cap, [&](const ReducedWord& w) {
    ++tested;
    if (!concat(w, w.inverted()).empty()) {
      bad = w.str();
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("inverse-cancels", "w * w^-1 != 1 for " + bad);
  return pass("inverse-cancels", "w * w^-1 = 1 for all " + plural(tested, "word") + " up to length " +
                                     std::to_string(config.len_cap));
}

CheckResult check_normal_form_count(const VerifyConfig&) {
  std::vector<std::size_t> by_len(11, 0);
  for_each_reduced_word(10, [&](const ReducedWord& w) {
    ++by_len[w.length()];
    return true;
  });
  for (std::size_t l = 0; l <= 10; ++l) {
    if (by_len[l] != count_reduced_words(l)) {
      return fail("normal-form-count",
                  "length " + std::to_string(l) + ": enumerated " + std::to_string(by_len[l]) +
                      ", closed form " + std::to_string(count_reduced_words(l)));
    }
  }
  return pass("normal-form-count", "enumeration matches 7^floor(L/2) + 7^ceil(L/2) for L <= 10");
}

CheckResult check_parse_format_roundtrip(const VerifyConfig&) {
  std::size_t tested = 0;
  std::string bad;
  for_each_reduced_word(6, [&](const ReducedWord& w) {
    ++tested;
    if (ReducedWord::parse(w.str()) != w) {
      bad = w.str();
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("parse-format-roundtrip", bad);
  return pass("parse-format-roundtrip", "parse(str(w)) = w for " + plural(tested, "word"));
}

const std::array<const char*, 6> kSampleOracles = {"(0)",   "(01)",    "(012)",
                                                   "121(0)", "012(120)", "2(01)"};

CheckResult check_oracle_shift_symbol(const VerifyConfig&) {
  for (const char* text : kSampleOracles) {
    const Oracle o = Oracle::parse(text);
    const Oracle s = o.shift();
    for (std::size_t n = 1; n <= 50; ++n) {
      if (o.symbol_at(n + 1) != s.symbol_at(n)) {
        return fail("shift-symbol", std::string(text) + " at position " + std::to_string(n));
      }
    }
  }
  return pass("shift-symbol", "symbol_at(o, n+1) = symbol_at(shift(o), n) for n <= 50");
}

CheckResult check_oracle_classify_shift(const VerifyConfig&) {
  for (const char* text : kSampleOracles) {
    Oracle o = Oracle::parse(text);
    const OmegaClass cls = classify(o).cls;
    for (int k = 0; k < 12; ++k) {
      o = o.shift();
      if (classify(o).cls != cls) {
        return fail("classify-shift-invariant", std::string(text) + " after " +
                                                    std::to_string(k + 1) + " shifts");
      }
    }
  }
  return pass("classify-shift-invariant", "class is stable under 12 shifts for all samples");
}

CheckResult check_oracle_orbit(const VerifyConfig&) {
  for (const char* text : kSampleOracles) {
    const Oracle start = Oracle::parse(text);
    const std::size_t bound = start.prefix().size() + start.period().size();
    std::vector<std::string> seen;
    Oracle o = start;
    while (true) {
      const std::string s = o.str();
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) break;
      seen.push_back(s);
      if (seen.size() > bound) {
        return fail("shift-orbit-finite", std::string(text) + " orbit exceeded " +
                                              std::to_string(bound));
      }
      o = o.shift();
    }
  }
  return pass("shift-orbit-finite", "orbit size <= |prefix| + |period| for all samples");
}

CheckResult check_oracle_parse_roundtrip(const VerifyConfig&) {
  const std::array<std::pair<const char*, const char*>, 5> cases = {
      std::pair{"(0)", "(0)"},           std::pair{"10(0)", "1(0)"},
      std::pair{"0(00)", "(0)"},         std::pair{"012(120)", "012(120)"},
      std::pair{"(0101)", "(01)"}};
  for (const auto& [input, want] : cases) {
    const Oracle o = Oracle::parse(input);
    if (o.str() != want) {
      return fail("parse-roundtrip", std::string(input) + " -> " + o.str() + ", want " + want);
    }
    if (!(Oracle::parse(o.str()) == o)) {
      return fail("parse-roundtrip", std::string("reparse of ") + o.str());
    }
  }
  for (const char* text : kSampleOracles) {
    const Oracle o = Oracle::parse(text);
    for (std::size_t n = 1; n <= 24; ++n) {
      if (Oracle::parse(o.str()).symbol_at(n) != o.symbol_at(n)) {
        return fail("parse-roundtrip", std::string(text) + ": symbol stream changed by reparse");
      }
    }
  }
  return pass("parse-roundtrip",
              "canonical forms are fixed points; reparse preserves symbol streams");
}

CheckResult check_pi0_linearity(const VerifyConfig&) {
  for (int s = 0; s < 3; ++s) {
    const Symbol sym = static_cast<Symbol>(s);
    for (int i = 1; i <= 7; ++i) {
      for (int j = 1; j <= 7; ++j) {
        const KElement ki(static_cast<std::uint8_t>(i)), kj(static_cast<std::uint8_t>(j));
        const bool lhs = pi0(kmul(ki, kj), sym) == FirstLevelAction::swap;
        const bool rhs = (pi0(ki, sym) == FirstLevelAction::swap) !=
                         (pi0(kj, sym) == FirstLevelAction::swap);
        if (lhs != rhs) {
          return fail("pi0-linearity", std::string("pair ") + ki.letter_char() + kj.letter_char() +
                                           " at symbol " + to_char(sym));
        }
      }
    }
  }
  return pass("pi0-linearity", "pi0(k1*k2, s) = pi0(k1, s) + pi0(k2, s) for all 49 pairs, 3 symbols");
}

CheckResult check_split_homomorphism(const VerifyConfig&) {
  std::size_t pairs = 0;
  for (const char* text : {"(0)", "(01)", "(012)"}) {
    const Oracle o = Oracle::parse(text);
    std::vector<ReducedWord> even;
    for_each_reduced_word(6, [&](const ReducedWord& w) {
      if (even_a_parity(w)) even.push_back(w);
      return true;
    });
    for (const ReducedWord& u : even) {
      const auto [ul, ur] = split(u, o);
      for (const ReducedWord& v : even) {
        const auto [vl, vr] = split(v, o);
        const auto [pl, pr] = split(concat(u, v), o);
        if (pl != concat(ul, vl) || pr != concat(ur, vr)) {
          return fail("split-homomorphism",
                      "u=" + u.str() + " v=" + v.str() + " over " + text);
        }
        ++pairs;
      }
    }
  }
  return pass("split-homomorphism",
              plural(pairs, "even-parity pair") + " up to length 6 over 3 oracles");
}

CheckResult check_section_length_bound(const VerifyConfig& config) {
  std::mt19937 rng(config.seed + 23);
  std::size_t tested = 0;
  for (const char* text : {"(01)", "(012)", "121(0)"}) {
    const Oracle o = Oracle::parse(text);
    for (std::size_t len = 1; len <= 16; ++len) {
      for (int t = 0; t < 120; ++t) {
        const ReducedWord w = random_reduced_word(rng, len);
        const std::size_t L = w.length();
        std::vector<ReducedWord> level{w};
        Oracle cur = o;
        for (int n = 1; n <= 4; ++n) {
          std::vector<ReducedWord> next;
          next.reserve(level.size() * 2);
          for (const ReducedWord& word : level) {
            LevelOneSplit s = split_with_parity(word, cur);
            next.push_back(std::move(s.left));
            next.push_back(std::move(s.right));
          }
          level = std::move(next);
          cur = cur.shift();
          const std::size_t pow2 = std::size_t{1} << n;
          for (const ReducedWord& sec : level) {
            // |section| <= |w|/2^n + 1 - 1/2^n, in integers
            if (sec.length() * pow2 > L + pow2 - 1) {
              return fail("section-length-bound",
                          "w=" + w.str() + " depth " + std::to_string(n) + " over " + text);
            }
          }
          ++tested;
        }
      }
    }
  }
  return pass("section-length-bound",
              "random words to length 16, depth <= 4, 3 oracles (" + plural(tested, "level") + ")");
}

CheckResult check_tree_action_consistency(const VerifyConfig& config) {
  const std::size_t len = std::min<std::size_t>(config.len_cap, 8);
  std::size_t tested = 0;
  for (const char* text : {"(0)", "(01)", "(012)", "121(0)"}) {
    const Oracle o = Oracle::parse(text);
    std::string bad;
    for_each_reduced_word(len, [&](const ReducedWord& w) {
      for (int level = 0; level <= 4; ++level) {
        if (level_permutation(w, o, level) != split_tree_permutation(w, o, level)) {
          bad = w.str() + " at level " + std::to_string(level) + " over " + text;
          return false;
        }
      }
      ++tested;
      return true;
    });
    if (!bad.empty()) return fail("tree-action-consistency", bad);
  }
  return pass("tree-action-consistency",
              "direct fold = split-tree parities, levels <= 4, " + plural(tested, "word/oracle pair"));
}

CheckResult equivalence_sweep(const std::string& id, const char* spec_a, const char* spec_b,
                              std::size_t len_cap) {
  Decider da = make(spec_a);
  Decider db = make(spec_b);
  std::size_t tested = 0;
  std::string bad;
  for_each_reduced_word(len_cap, [&](const ReducedWord& w) {
    ++tested;
    if (da.is_identity(w) != db.is_identity(w)) {
      bad = w.str();
      return false;
    }
    return true;
  });
  if (!bad.empty()) {
    return fail(id, std::string(spec_a) + " vs " + spec_b + " disagree on " + bad);
  }
  return pass(id, std::string(spec_a) + " = " + spec_b + " on all " + plural(tested, "word") +
                      " up to length " + std::to_string(len_cap));
}

CheckResult check_alpha_exact_omega0(const VerifyConfig& config) {
  return equivalence_sweep("alpha-exact-omega0", "alpha@(012)", "exact@(012)", config.len_cap);
}

CheckResult check_beta01_exact_omega1(const VerifyConfig& config) {
  return equivalence_sweep("beta01-exact-omega1", "beta-01@(01)", "exact@(01)", config.len_cap);
}

CheckResult check_modified_implies_exact(const VerifyConfig& config) {
  const std::array<std::pair<const char*, std::vector<const char*>>, 3> cases = {
      std::pair{"(0)", std::vector<const char*>{"alpha", "beta-01", "beta-20"}},
      std::pair{"(01)", std::vector<const char*>{"alpha", "beta-01"}},
      std::pair{"10(0)", std::vector<const char*>{"alpha", "beta-01", "beta-20"}}};
  std::size_t implications = 0;
  for (const auto& [oracle_text, families] : cases) {
    Decider exact_d = make(std::string("exact@") + oracle_text);
    for (const char* family : families) {
      Decider mod_d = make(std::string(family) + "@" + oracle_text);
      std::string bad;
      for_each_reduced_word(config.len_cap, [&](const ReducedWord& w) {
        if (mod_d.is_identity(w)) {
          ++implications;
          if (!exact_d.is_identity(w)) {
            bad = w.str();
            return false;
          }
        }
        return true;
      });
      if (!bad.empty()) {
        return fail("modified-implies-exact", std::string(family) + "@" + oracle_text +
                                                  " accepts " + bad + " but exact does not");
      }
    }
  }
  return pass("modified-implies-exact",
              "modified-trivial => exact-trivial; " + plural(implications, "trivial word") +
                  " re-checked over 3 oracles, length <= " + std::to_string(config.len_cap));
}

CheckResult check_kernel_witnesses(const VerifyConfig&) {
  Decider e0 = make("exact@(0)");
  Decider a0 = make("alpha@(0)");
  Decider e01 = make("exact@(01)");
  Decider a01 = make("alpha@(01)");
  const ReducedWord d = ReducedWord::parse("d");
  const ReducedWord bt = ReducedWord::parse("B");
  if (!e0.is_identity(d) || a0.is_identity(d)) {
    return fail("kernel-witnesses", "d should be exact-only-trivial at (0)");
  }
  if (!e01.is_identity(bt) || a01.is_identity(bt)) {
    return fail("kernel-witnesses", "B should be exact-only-trivial at (01)");
  }
  return pass("kernel-witnesses", "d at (0) and B at (01) are exact-trivial, alpha-nontrivial");
}

CheckResult check_conjugation_congruence(const VerifyConfig& config) {
  std::mt19937 rng(config.seed + 37);
  std::size_t conjugations = 0;
  for (const char* spec_text : {"exact@(0)", "exact@(01)", "beta-01@(0)", "alpha@(0)"}) {
    Decider d = make(spec_text);
    std::vector<ReducedWord> trivial;
    for_each_reduced_word(6, [&](const ReducedWord& w) {
      if (!w.empty() && d.is_identity(w)) trivial.push_back(w);
      return trivial.size() < 15;
    });
    if (trivial.empty()) continue;  // no nontrivial identities at this length
    std::uniform_int_distribution<std::size_t> ldist(1, 6);
    for (int t = 0; t < 100; ++t) {
      const ReducedWord u = random_reduced_word(rng, ldist(rng));
      const ReducedWord& w = trivial[static_cast<std::size_t>(t) % trivial.size()];
      if (!d.is_identity(conjugate(w, u))) {
        return fail("conjugation-congruence",
                    std::string(spec_text) + ": w=" + w.str() + " u=" + u.str());
      }
      ++conjugations;
    }
  }
  return pass("conjugation-congruence",
              "identity survives " + plural(conjugations, "random conjugation") + " across 4 specs");
}

CheckResult check_exact_vs_direct(const VerifyConfig& config) {
  std::size_t tested = 0;
  for (const char* text : {"(0)", "(01)", "(012)", "121(0)"}) {
    const Oracle o = Oracle::parse(text);
    Decider d = make(std::string("exact@") + text);
    std::string bad;
    for_each_reduced_word(config.len_cap, [&](const ReducedWord& w) {
      const int n = alpha_depth(w.length());
      bool direct;
      if (!is_identity_perm(level_permutation(w, o, n))) {
        direct = false;
      } else {
        // fixing level n pointwise puts w in the level-n stabilizer
        const NucleusResult res = nucleus_at(w, o, n);
        const Nucleus& nuc = std::get<Nucleus>(res);
        const Oracle deep = shifted_by(o, n);
        direct = true;
        for (const auto& entry : nuc.entries) {
          if (!entry) continue;
          if (entry->is_a() || !generator_trivial(entry->kelem(), deep)) {
            direct = false;
            break;
          }
        }
      }
      if (direct != d.is_identity(w)) {
        bad = w.str();
        return false;
      }
      ++tested;
      return true;
    });
    if (!bad.empty()) return fail("exact-vs-direct-action", bad + std::string(" over ") + text);
  }
  return pass("exact-vs-direct-action",
              "recursive decider = (level-N fix + trivial nucleus letters) on " +
                  plural(tested, "word/oracle pair"));
}

CheckResult check_ultrametric(const VerifyConfig&) {
  const std::array<std::array<const char*, 3>, 2> triples = {
      std::array<const char*, 3>{"exact@(012)", "exact@012(120)", "alpha@(012)"},
      std::array<const char*, 3>{"exact@(0)", "beta-01@(0)", "beta-20@(0)"}};
  for (const auto& t : triples) {
    Decider s1 = make(t[0]), s2 = make(t[1]), s3 = make(t[2]);
    for (int n = 0; n <= 2; ++n) {
      const bool e12 = balls_equal(s1, s2, n).equal;
      const bool e23 = balls_equal(s2, s3, n).equal;
      const bool e13 = balls_equal(s1, s3, n).equal;
      if (e12 && e23 && !e13) {
        return fail("ultrametric-resolution",
                    std::string(t[0]) + "," + t[1] + "," + t[2] + " at n=" + std::to_string(n));
      }
    }
    const double d12 = metric(s1, s2, 2).distance;
    const double d23 = metric(s2, s3, 2).distance;
    const double d13 = metric(s1, s3, 2).distance;
    if (d13 > std::max(d12, d23)) {
      return fail("ultrametric-resolution", "d(s1,s3) > max(d(s1,s2), d(s2,s3)) at resolution 1/4");
    }
  }
  return pass("ultrametric-resolution",
              "agreement transitivity and d13 <= max(d12, d23) on 2 spec triples, n <= 2");
}

CheckResult check_metric_cap_instance(const VerifyConfig&) {
  Decider s1 = make("exact@(012)");
  Decider s2 = make("exact@012(120)");
  if (!balls_equal(s1, s2, 3).equal) {
    return fail("metric-cap-instance", "balls at radius 3 differ");
  }
  const MetricResult m = metric(s1, s2, 3);
  if (m.exact || m.n != 3 || m.distance != 0.125) {
    return fail("metric-cap-instance", "expected upper bound 2^-3, got " + std::to_string(m.distance));
  }
  return pass("metric-cap-instance",
              "exact@(012) and exact@012(120) agree to radius 3; metric upper bound 0.125");
}

CheckResult check_agreement_monotone(const VerifyConfig&) {
  const std::array<std::pair<const char*, const char*>, 3> pairs = {
      std::pair{"exact@(012)", "exact@012(120)"}, std::pair{"exact@(0)", "alpha@(0)"},
      std::pair{"alpha@(0)", "beta-01@(0)"}};
  for (const auto& [a, b] : pairs) {
    Decider s1 = make(a), s2 = make(b);
    bool prev = true;
    for (int n = 0; n <= 3; ++n) {
      const bool eq = balls_equal(s1, s2, n).equal;
      if (eq && !prev) {
        return fail("agreement-monotone",
                    std::string(a) + " vs " + b + ": equal at n=" + std::to_string(n) +
                        " after differing below");
      }
      prev = eq;
    }
  }
  return pass("agreement-monotone", "balls_equal is downward closed in n on 3 spec pairs, n <= 3");
}

CheckResult check_ball_not_free(const VerifyConfig& config) {
  std::ostringstream detail;
  for (const char* text : {"exact@(0)", "exact@(01)", "exact@(012)", "alpha@(01)"}) {
    Decider d = make(text);
    for (int r = 0; r <= 4; ++r) {
      const std::size_t size = ball(d, r, config.caps).size();
      const std::size_t free_count = count_reduced_words_upto(static_cast<std::size_t>(r));
      if (size > free_count) {
        return fail("ball-not-free", std::string(text) + " r=" + std::to_string(r) + ": " +
                                         std::to_string(size) + " > " + std::to_string(free_count));
      }
      if (r == 4 && std::string(text) == "exact@(012)" && size >= free_count) {
        return fail("ball-not-free",
                    "exact@(012) radius-4 ball is free (" + std::to_string(size) + ")");
      }
    }
  }
  Decider g012 = make("exact@(012)");
  detail << "|B(r)| <= free count everywhere; exact@(012): |B(4)| = " << ball(g012, 4, config.caps).size()
         << " < " << count_reduced_words_upto(4);
  return pass("ball-not-free", detail.str());
}

CheckResult check_ball_canonical(const VerifyConfig& config) {
  for (const char* text : {"exact@(01)", "alpha@(0)"}) {
    Decider d = make(text);
    const Ball b = ball(d, 3, config.caps);
    if (b.representatives.empty() || !b.representatives.front().empty()) {
      return fail("ball-canonical-reps", std::string(text) + ": first representative is not the empty word");
    }
    for (std::size_t i = 1; i < b.representatives.size(); ++i) {
      if (!shortlex_less(b.representatives[i - 1], b.representatives[i])) {
        return fail("ball-canonical-reps", std::string(text) + ": representatives out of shortlex order");
      }
    }
  }
  return pass("ball-canonical-reps", "representatives are shortlex-sorted and start at the empty word");
}

CheckResult check_growth_goldens(const VerifyConfig& config) {
  const std::array<std::pair<const char*, std::vector<std::size_t>>, 3> goldens = {
      std::pair{"exact@(0)", std::vector<std::size_t>{1, 3, 5, 7, 9, 11}},
      std::pair{"exact@(01)", std::vector<std::size_t>{1, 5, 11, 23, 40, 68}},
      std::pair{"alpha@(01)", std::vector<std::size_t>{1, 9, 23, 79, 168, 416}}};
  for (const auto& [text, want] : goldens) {
    Decider d = make(text);
    const std::vector<std::size_t> got = growth_values(d, 5, config.caps);
    if (got != want) {
      std::ostringstream oss;
      oss << text << ": got";
      for (std::size_t v : got) oss << ' ' << v;
      oss << ", want";
      for (std::size_t v : want) oss << ' ' << v;
      return fail("growth-goldens", oss.str());
    }
  }
  return pass("growth-goldens", "frozen |B(0..5)| match for exact@(0), exact@(01), alpha@(01)");
}

CheckResult check_growth_dominance(const VerifyConfig& config) {
  Decider e01 = make("exact@(01)");
  Decider a01 = make("alpha@(01)");
  const auto ge = growth_values(e01, 5, config.caps);
  const auto ga = growth_values(a01, 5, config.caps);
  bool strict = false;
  for (std::size_t r = 0; r < ge.size(); ++r) {
    if (ga[r] < ge[r]) {
      return fail("growth-dominance", "alpha < exact at r=" + std::to_string(r));
    }
    strict = strict || ga[r] > ge[r];
  }
  if (!strict) return fail("growth-dominance", "no radius with strict inequality");
  return pass("growth-dominance", "|B_alpha(r)| >= |B_exact(r)| at (01), strict from r = 1");
}

CheckResult check_convergence_instance(const VerifyConfig& config) {
  Decider a01 = make("alpha@(01)");
  double prev = 2.0;
  std::ostringstream detail;
  detail << "distances";
  for (int m = 2; m <= 8; m += 2) {
    std::string prefix;
    for (int i = 0; i < m; ++i) prefix += (i % 2 == 0) ? '0' : '1';
    Decider em = make("exact@" + prefix + "(012)");
    const MetricResult mr = metric(em, a01, 3, config.caps);
    if (mr.distance > prev) {
      return fail("convergence-instance", "distance increased at m=" + std::to_string(m));
    }
    prev = mr.distance;
    detail << ' ' << mr.distance;
    const int rmax = (m == 2) ? 1 : 3;  // radii with m > log2(2r)
    for (int r = 1; r <= rmax; ++r) {
      if (!balls_equal(em, a01, r, config.caps).equal) {
        return fail("convergence-instance",
                    "balls differ at m=" + std::to_string(m) + " r=" + std::to_string(r));
      }
      if (mr.distance > std::ldexp(1.0, -r)) {
        return fail("convergence-instance",
                    "distance above 2^-r at m=" + std::to_string(m) + " r=" + std::to_string(r));
      }
    }
  }
  return pass("convergence-instance", detail.str() + " (m = 2,4,6,8; non-increasing, ball agreement)");
}

const std::array<KElement, 3> kSpineLetters = {gen::d, gen::bt, gen::ct};

CheckResult check_vn_involutions(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  for (KElement y : kSpineLetters) {
    for (long long n = -4; n <= 4; ++n) {
      const ReducedWord v = v_word(y, n);
      if (a0.is_identity(v)) {
        return fail("vn-involutions", std::string(1, KElement(y).letter_char()) + " n=" +
                                          std::to_string(n) + ": v_n is trivial");
      }
      if (!a0.is_identity(concat(v, v))) {
        return fail("vn-involutions", "v_n^2 != 1 at n=" + std::to_string(n));
      }
      if (!a0.equal(conjugate(v, ReducedWord::parse("a")), v_word(y, -n - 1))) {
        return fail("vn-involutions", "v_n^a != v_{-n-1} at n=" + std::to_string(n));
      }
    }
  }
  return pass("vn-involutions", "v_n nontrivial involutions with v_n^a = v_{-n-1}; 3 letters, |n| <= 4");
}

CheckResult check_vn_split_rule(const VerifyConfig&) {
  const Oracle o = Oracle::parse("(0)");
  for (KElement y : kSpineLetters) {
    for (long long n = -4; n <= 4; ++n) {
      const auto [left, right] = split(v_word(y, n), o);
      if (n % 2 == 0) {
        if (!left.empty() || right != v_word(y, n / 2)) {
          return fail("vn-split-rule", "even n=" + std::to_string(n));
        }
      } else {
        // odd n: C++ truncation gives -(n+1)/2 exactly since n+1 is even
        if (!right.empty() || left != v_word(y, -(n + 1) / 2)) {
          return fail("vn-split-rule", "odd n=" + std::to_string(n));
        }
      }
    }
  }
  return pass("vn-split-rule",
              "split(v_n) = (1, v_{n/2}) for even n and (v_{-(n+1)/2}, 1) for odd n, literally");
}

CheckResult check_vn_commute_distinct(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  for (KElement y : kSpineLetters) {
    for (long long m = -4; m <= 4; ++m) {
      for (long long n = m + 1; n <= 4; ++n) {
        const ReducedWord vm = v_word(y, m), vn = v_word(y, n);
        if (!a0.is_identity(commutator(vm, vn))) {
          return fail("vn-commute-distinct",
                      "[v_m, v_n] != 1 at m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
        if (a0.equal(vm, vn)) {
          return fail("vn-commute-distinct",
                      "v_m = v_n at m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return pass("vn-commute-distinct", "pairwise commuting and distinct; 3 letters, |m|,|n| <= 4");
}

CheckResult check_vn_shift(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  const ReducedWord ax = ReducedWord::parse("ax");
  for (KElement y : kSpineLetters) {
    for (long long n = -4; n <= 3; ++n) {
      if (!a0.equal(conjugate(v_word(y, n), ax), v_word(y, n + 1))) {
        return fail("vn-shift", "v_n^(ax) != v_{n+1} at n=" + std::to_string(n));
      }
    }
  }
  return pass("vn-shift", "conjugation by ax shifts v_n to v_{n+1}; 3 letters, |n| <= 4");
}

CheckResult check_vertex_labels(const VerifyConfig&) {
  static constexpr std::array<std::pair<const char*, long long>, 15> labels = {
      std::pair{"", 0LL},     std::pair{"0", -1LL},   std::pair{"1", 0LL},
      std::pair{"00", 1LL},   std::pair{"01", -1LL},  std::pair{"10", -2LL},
      std::pair{"11", 0LL},   std::pair{"000", -3LL}, std::pair{"001", 1LL},
      std::pair{"010", 3LL},  std::pair{"011", -1LL}, std::pair{"100", 2LL},
      std::pair{"101", -2LL}, std::pair{"110", -4LL}, std::pair{"111", 0LL}};
  for (const auto& [path, want] : labels) {
    if (v_index(path) != want) {
      return fail("vertex-labels-15", std::string("path '") + path + "': got " +
                                          std::to_string(v_index(path)) + ", want " +
                                          std::to_string(want));
    }
  }
  return pass("vertex-labels-15", "all 15 vertex indices on the first three levels match");
}

CheckResult check_vertex_word_literal(const VerifyConfig&) {
  static constexpr std::array<const char*, 15> paths = {"",    "0",   "1",   "00",  "01",
                                                        "10",  "11",  "000", "001", "010",
                                                        "011", "100", "101", "110", "111"};
  for (KElement y : kSpineLetters) {
    for (const char* path : paths) {
      if (V_word(y, path) != v_word(y, v_index(path))) {
        return fail("vertex-word-literal", std::string("path '") + path + "'");
      }
    }
  }
  return pass("vertex-word-literal", "V(path) = v_{index(path)} letter for letter; 3 letters, 15 paths");
}

CheckResult check_nucleus_locality(const VerifyConfig&) {
  const Oracle o = Oracle::parse("(0)");
  static constexpr std::array<const char*, 15> paths = {"",    "0",   "1",   "00",  "01",
                                                        "10",  "11",  "000", "001", "010",
                                                        "011", "100", "101", "110", "111"};
  for (const char* path : paths) {
    const std::string p(path);
    const ReducedWord w = V_word(gen::d, p);
    const NucleusResult res = nucleus_at(w, o, static_cast<int>(p.size()));
    const Nucleus* nuc = std::get_if<Nucleus>(&res);
    if (!nuc) return fail("nucleus-locality", "path '" + p + "': not in the stabilizer");
    std::size_t nonempty = 0;
    for (const auto& e : nuc->entries) nonempty += e.has_value();
    if (nonempty != 1 || !nuc->at(p) || nuc->at(p)->is_a() || !(nuc->at(p)->kelem() == gen::d)) {
      return fail("nucleus-locality", "path '" + p + "': entries are not (d at path, empty elsewhere)");
    }
  }
  return pass("nucleus-locality", "depth-|p| entries of V(p) are d at p and empty elsewhere, |p| <= 3");
}

CheckResult wij_contract(const std::string& id, const char* oracle_text, Symbol i, Symbol j,
                         const char* other_beta, const char* expect_word, bool expect_degenerate) {
  const Oracle o = Oracle::parse(oracle_text);
  const WijResult w = w_ij(o, i, j);
  if (expect_word && w.word.str() != expect_word) {
    return fail(id, std::string("word is ") + w.word.str() + ", want " + expect_word);
  }
  if (w.degenerate != expect_degenerate) {
    return fail(id, w.degenerate ? "unexpectedly degenerate" : "expected the degenerate shape");
  }
  const std::string pair = std::string(1, to_char(i)) + to_char(j);
  Decider accepting(GroupSpec{DeciderFamily::beta(i, j), o});
  Decider alpha_d(GroupSpec{DeciderFamily::alpha(), o});
  if (!accepting.is_identity(w.word)) return fail(id, "beta-" + pair + " rejects its witness");
  if (alpha_d.is_identity(w.word)) return fail(id, "alpha accepts the witness");
  if (other_beta) {
    Decider other = make(std::string(other_beta) + "@" + oracle_text);
    if (other.is_identity(w.word)) {
      return fail(id, std::string(other_beta) + " accepts the witness");
    }
  }
  std::string detail = "W = " + w.word.str() + "; beta-" + pair + " accepts, alpha rejects";
  if (other_beta) detail += std::string(", ") + other_beta + " rejects";
  return pass(id, detail);
}

CheckResult check_wij_main(const VerifyConfig&) {
  return wij_contract("wij-main-instance", "121(0)", Symbol::zero, Symbol::one, "beta-20",
                      "BabaBabaBabaBaba", false);
}

CheckResult check_wij_degenerate(const VerifyConfig&) {
  const CheckResult a = wij_contract("wij-degenerate-instances", "2(0)", Symbol::zero, Symbol::one,
                                     "beta-20", "BaBaBaBa", true);
  if (!a.pass) return a;
  const CheckResult b = wij_contract("wij-degenerate-instances", "1(0)", Symbol::two, Symbol::zero,
                                     "beta-01", "CaCaCaCa", true);
  if (!b.pass) return b;
  return pass("wij-degenerate-instances", "oracles starting inside the excluded run: " + a.detail +
                                              " / " + b.detail);
}

CheckResult check_wij_absent(const VerifyConfig&) {
  return wij_contract("wij-absent-excluded", "(0)", Symbol::zero, Symbol::one, "beta-20", "B",
                      false);
}

CheckResult check_wij_entry_classes(const VerifyConfig&) {
  const Oracle o = Oracle::parse("121(0)");
  const WijResult w = w_ij(o, Symbol::zero, Symbol::one);
  const NucleusResult res = nucleus_at(w.word, o, 4);
  const Nucleus* nuc = std::get_if<Nucleus>(&res);
  if (!nuc) return fail("wij-entry-classes", "witness is not in the depth-4 stabilizer");
  std::size_t accepted = 0, empty = 0;
  for (const auto& e : nuc->entries) {
    if (!e) {
      ++empty;
    } else if (!e->is_a() && e->kelem() == gen::bt) {
      ++accepted;
    } else {
      return fail("wij-entry-classes", std::string("entry '") + e->ch() + "' outside {1, B}");
    }
  }
  return pass("wij-entry-classes", "all 16 depth-4 entries lie in {1, B} (" +
                                       std::to_string(accepted) + " B, " + std::to_string(empty) +
                                       " empty)");
}

CheckResult check_fmap_isomorphism(const VerifyConfig&) {
  Decider b01 = make("beta-01@(0)");
  Decider a0 = make("alpha@(0)");
  std::size_t tested = 0;
  std::string bad;
  for_each_reduced_word(6, [&](const ReducedWord& w) {
    ++tested;
    if (b01.is_identity(w) != a0.is_identity(f_map(w))) {
      bad = w.str();
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("fmap-isomorphism", "mismatch at " + bad);
  return pass("fmap-isomorphism",
              "beta-01@(0) triviality of w = alpha@(0) triviality of f(w) on " +
                  plural(tested, "word") + " up to length 6");
}

CheckResult check_fmap_letters(const VerifyConfig&) {
  const std::array<std::pair<const char*, const char*>, 8> table = {
      std::pair{"a", "a"}, std::pair{"b", "b"}, std::pair{"c", "c"}, std::pair{"d", "d"},
      std::pair{"x", "b"}, std::pair{"B", ""},  std::pair{"C", "d"}, std::pair{"D", "c"}};
  for (const auto& [in, want] : table) {
    if (f_map(ReducedWord::parse(in)).str() != want) {
      return fail("fmap-letter-table", std::string(in) + " -> " + f_map(ReducedWord::parse(in)).str());
    }
  }
  if (f_map(ReducedWord::parse("aCa")).str() != "ada") {
    return fail("fmap-letter-table", "aCa should map to ada");
  }
  return pass("fmap-letter-table", "letterwise images match (x -> b, B -> 1, C -> d, D -> c)");
}

CheckResult check_lamplighter_commute(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  std::size_t tested = 0;
  for (KElement y : kSpineLetters) {
    for (KElement z : kSpineLetters) {
      for (long long m = -3; m <= 3; ++m) {
        for (long long n = -3; n <= 3; ++n) {
          if (!a0.is_identity(commutator(v_word(y, m), v_word(z, n)))) {
            return fail("lamplighter-commute",
                        std::string("[v(") + KElement(y).letter_char() + ")_" + std::to_string(m) +
                            ", v(" + KElement(z).letter_char() + ")_" + std::to_string(n) + "] != 1");
          }
          ++tested;
        }
      }
    }
  }
  return pass("lamplighter-commute", plural(tested, "commutator") + " vanish (3x3 letters, |m|,|n| <= 3)");
}

CheckResult check_lamplighter_involutions(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  std::vector<std::pair<std::string, ReducedWord>> gens;
  for (KElement y : kSpineLetters) {
    for (long long n = -3; n <= 3; ++n) {
      gens.emplace_back(std::string(1, KElement(y).letter_char()) + "_" + std::to_string(n),
                        v_word(y, n));
    }
  }
  for (const auto& [name, g] : gens) {
    if (a0.is_identity(g) || !a0.is_identity(concat(g, g))) {
      return fail("lamplighter-involutions-distinct", name + " is not a nontrivial involution");
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (a0.equal(gens[i].second, gens[j].second)) {
        return fail("lamplighter-involutions-distinct",
                    gens[i].first + " = " + gens[j].first);
      }
    }
  }
  // products of same-index spine generators are involutions too
  for (long long n = -3; n <= 3; ++n) {
    for (KElement y : kSpineLetters) {
      for (KElement z : kSpineLetters) {
        const ReducedWord p = concat(v_word(y, n), v_word(z, n));
        if (!a0.is_identity(concat(p, p))) {
          return fail("lamplighter-involutions-distinct", "pair product squared != 1");
        }
      }
    }
    const ReducedWord triple =
        concat(concat(v_word(gen::d, n), v_word(gen::bt, n)), v_word(gen::ct, n));
    if (!a0.is_identity(concat(triple, triple))) {
      return fail("lamplighter-involutions-distinct", "triple product squared != 1");
    }
  }
  return pass("lamplighter-involutions-distinct",
              "21 generators: nontrivial involutions, pairwise distinct, products involutive");
}

CheckResult check_lamplighter_shift(const VerifyConfig&) {
  Decider a0 = make("alpha@(0)");
  const ReducedWord ax = ReducedWord::parse("ax");
  for (KElement y : kSpineLetters) {
    for (long long n = -3; n <= 2; ++n) {
      if (!a0.equal(conjugate(v_word(y, n), ax), v_word(y, n + 1))) {
        return fail("lamplighter-shift", "shift fails at n=" + std::to_string(n));
      }
    }
  }
  return pass("lamplighter-shift", "conjugation by ax shifts every spine generator's index by +1");
}

CheckResult check_exact_collapse(const VerifyConfig&) {
  Decider e0 = make("exact@(0)");
  const ReducedWord b = ReducedWord::parse("b");
  for (const char* same : {"c", "D", "x"}) {
    if (!e0.equal(b, ReducedWord::parse(same))) {
      return fail("exact-collapse-constant-oracle", std::string("b != ") + same);
    }
  }
  for (const char* triv : {"d", "B", "C"}) {
    if (!e0.is_identity(ReducedWord::parse(triv))) {
      return fail("exact-collapse-constant-oracle", std::string(triv) + " != 1");
    }
  }
  if (e0.is_identity(b) || e0.is_identity(ReducedWord::parse("a"))) {
    return fail("exact-collapse-constant-oracle", "a or b collapsed to 1");
  }
  return pass("exact-collapse-constant-oracle",
              "exact@(0): b = c = D = x nontrivial, d = B = C = 1 (dihedral on a, b)");
}

CheckResult check_pairwise_distinct(const VerifyConfig& config) {
  const std::array<const char*, 4> specs = {"exact@(0)", "alpha@(0)", "beta-01@(0)", "beta-20@(0)"};
  const std::map<std::pair<int, int>, const char*> frozen = {
      {{0, 1}, "d"}, {{0, 2}, "d"}, {{0, 3}, "d"}, {{1, 2}, "B"}, {{1, 3}, "C"}, {{2, 3}, "B"}};
  std::ostringstream detail;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Decider s1 = make(specs[static_cast<std::size_t>(i)]);
      Decider s2 = make(specs[static_cast<std::size_t>(j)]);
      const auto w = find_distinguishing_word(s1, s2, 16, config.caps);
      if (!w) {
        return fail("pairwise-distinct-families",
                    std::string(specs[static_cast<std::size_t>(i)]) + " vs " +
                        specs[static_cast<std::size_t>(j)] + ": none within length 16");
      }
      const char* want = frozen.at({i, j});
      if (w->str() != want) {
        return fail("pairwise-distinct-families",
                    std::string(specs[static_cast<std::size_t>(i)]) + " vs " +
                        specs[static_cast<std::size_t>(j)] + ": witness " + w->str() +
                        ", frozen " + want);
      }
      detail << ' ' << w->str();
    }
  }
  return pass("pairwise-distinct-families", "six shortlex-least witnesses at (0):" + detail.str());
}

CheckResult check_distinct_oracles(const VerifyConfig& config) {
  Decider a0 = make("alpha@(0)");
  Decider a1 = make("alpha@(1)");
  const auto w = find_distinguishing_word(a0, a1, 16, config.caps);
  if (!w) return fail("distinct-oracles-alpha", "no witness within length 16");
  if (w->str() != "acacacac") {
    return fail("distinct-oracles-alpha", "witness " + w->str() + ", frozen acacacac");
  }
  return pass("distinct-oracles-alpha", "alpha@(0) vs alpha@(1) separated by " + w->str());
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  const auto add = [&](const char* id, const char* suite, std::vector<std::string> tags,
                       CheckResult (*fn)(const VerifyConfig&)) {
    defs.push_back(CheckDef{id, suite, std::move(tags), fn});
  };

  add("k-table", "contraction-table", {"words.k-group-structure"}, check_k_table);
  add("k-axioms", "contraction-table", {"words.k-group-structure"}, check_k_axioms);

  add("reduce-idempotent", "words", {"words.reduce-idempotent"}, check_reduce_idempotent);
  add("inverse-cancels", "words", {"words.inverse-cancels"}, check_inverse_cancels);
  add("normal-form-count", "words", {"words.count-closed-form"}, check_normal_form_count);
  add("parse-format-roundtrip", "words", {}, check_parse_format_roundtrip);

  add("shift-symbol", "oracle", {}, check_oracle_shift_symbol);
  add("classify-shift-invariant", "oracle", {}, check_oracle_classify_shift);
  add("shift-orbit-finite", "oracle", {}, check_oracle_orbit);
  add("parse-roundtrip", "oracle", {}, check_oracle_parse_roundtrip);

  add("pi0-linearity", "sections", {"sections.pi0-linearity"}, check_pi0_linearity);
  add("split-homomorphism", "sections", {"sections.split-homomorphism"}, check_split_homomorphism);
  add("section-length-bound", "sections", {"sections.length-bound"}, check_section_length_bound);
  add("tree-action-consistency", "sections", {"sections.tree-action-consistency"},
      check_tree_action_consistency);

  add("alpha-exact-omega0", "oracle-equivalence", {"wordproblem.alpha-exact-omega0"},
      check_alpha_exact_omega0);
  add("beta01-exact-omega1", "oracle-equivalence", {"wordproblem.beta-exact-omega1"},
      check_beta01_exact_omega1);

  add("modified-implies-exact", "kernel", {"wordproblem.surjection"}, check_modified_implies_exact);
  add("kernel-witnesses", "kernel", {"wordproblem.kernel-witness"}, check_kernel_witnesses);

  add("conjugation-congruence", "decider", {"wordproblem.conjugation-congruence"},
      check_conjugation_congruence);
  add("exact-vs-direct-action", "decider", {"wordproblem.exact-direct-oracle"},
      check_exact_vs_direct);

  add("ultrametric-resolution", "metric", {"markedspace.ultrametric"}, check_ultrametric);
  add("metric-cap-instance", "metric", {}, check_metric_cap_instance);

  add("agreement-monotone", "balls", {"markedspace.ball-agreement-monotone"},
      check_agreement_monotone);
  add("ball-not-free", "balls", {"markedspace.ball-not-free"}, check_ball_not_free);
  add("ball-canonical-reps", "balls", {}, check_ball_canonical);

  add("growth-goldens", "growth", {}, check_growth_goldens);
  add("growth-dominance", "growth", {}, check_growth_dominance);

  add("convergence-instance", "convergence", {"markedspace.convergence"},
      check_convergence_instance);

  add("vn-involutions", "vn", {"constructions.vn-properties"}, check_vn_involutions);
  add("vn-split-rule", "vn", {"constructions.vn-properties"}, check_vn_split_rule);
  add("vn-commute-distinct", "vn", {"constructions.vn-properties"}, check_vn_commute_distinct);
  add("vn-shift", "vn", {"constructions.vn-properties"}, check_vn_shift);

  add("vertex-labels-15", "vertex-labels", {"constructions.vertex-labels"}, check_vertex_labels);
  add("vertex-word-literal", "vertex-labels", {}, check_vertex_word_literal);
  add("nucleus-locality", "vertex-labels", {"constructions.nucleus-locality"},
      check_nucleus_locality);

  add("wij-main-instance", "wij", {}, check_wij_main);
  add("wij-degenerate-instances", "wij", {}, check_wij_degenerate);
  add("wij-absent-excluded", "wij", {}, check_wij_absent);
  add("wij-entry-classes", "wij", {}, check_wij_entry_classes);

  add("fmap-isomorphism", "fmap", {"constructions.f-isomorphism"}, check_fmap_isomorphism);
  add("fmap-letter-table", "fmap", {}, check_fmap_letters);

  add("lamplighter-commute", "lamplighter", {"constructions.lamplighter-relations"},
      check_lamplighter_commute);
  add("lamplighter-involutions-distinct", "lamplighter",
      {"constructions.lamplighter-relations"}, check_lamplighter_involutions);
  add("lamplighter-shift", "lamplighter", {"constructions.lamplighter-relations"},
      check_lamplighter_shift);
  add("exact-collapse-constant-oracle", "lamplighter", {}, check_exact_collapse);

  add("pairwise-distinct-families", "distinctness", {"constructions.distinctness"},
      check_pairwise_distinct);
  add("distinct-oracles-alpha", "distinctness", {"constructions.distinctness"},
      check_distinct_oracles);

  return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const CheckDef& def : check_registry()) {
    if (std::find(names.begin(), names.end(), def.suite) == names.end()) {
      names.push_back(def.suite);
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
  const bool all = suite == "all";
  if (!all) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::string known;
      for (const std::string& n : names) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("unknown suite '" + suite + "'; known: all, " + known);
    }
  }
  std::vector<CheckResult> results;
  for (const CheckDef& def : check_registry()) {
    if (!all && def.suite != suite) continue;
    try {
      results.push_back(def.run(config));
    } catch (const ResourceLimitExceeded&) {
      throw;
    } catch (const std::exception& e) {
      results.push_back(fail(def.id, std::string("exception: ") + e.what()));
    }
  }
  return results;
}

CheckResult run_check(const std::string& id, const VerifyConfig& config) {
  for (const CheckDef& def : check_registry()) {
    if (def.id == id) {
      try {
        return def.run(config);
      } catch (const ResourceLimitExceeded&) {
        throw;
      } catch (const std::exception& e) {
        return fail(def.id, std::string("exception: ") + e.what());
      }
    }
  }
  throw std::invalid_argument("unknown check id '" + id + "'");
}

std::vector<std::string> required_invariant_tags() {
  return {
      "words.reduce-idempotent",
      "words.inverse-cancels",
      "words.k-group-structure",
      "words.count-closed-form",
      "sections.split-homomorphism",
      "sections.length-bound",
      "sections.tree-action-consistency",
      "sections.pi0-linearity",
      "wordproblem.alpha-exact-omega0",
      "wordproblem.beta-exact-omega1",
      "wordproblem.surjection",
      "wordproblem.kernel-witness",
      "wordproblem.conjugation-congruence",
      "wordproblem.exact-direct-oracle",
      "markedspace.ultrametric",
      "markedspace.ball-agreement-monotone",
      "markedspace.ball-not-free",
      "markedspace.convergence",
      "constructions.vn-properties",
      "constructions.vertex-labels",
      "constructions.nucleus-locality",
      "constructions.lamplighter-relations",
      "constructions.f-isomorphism",
      "constructions.distinctness",
  };
}

nlohmann::json report_json(const std::string& suite, const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    checks.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass;
  }
  return {{"suite", suite},
          {"total", results.size()},
          {"passed", passed},
          {"failed", results.size() - passed},
          {"ok", passed == results.size()},
          {"checks", checks}};
}

std::string report_table(const std::string& suite, const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const CheckResult& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  out << "suite " << suite << "\n";
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.id;
    out << std::string(width - r.id.size() + 2, ' ') << r.detail << "\n";
    passed += r.pass;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace ogt
