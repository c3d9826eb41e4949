// Word-problem deciders: the exact group for an eventually periodic oracle,
// and the alpha / beta-ij modified groups.
//
// Exact: recursive descent through sections; a word is trivial iff it fixes
// level 1 and both sections are trivial over the shifted oracle, with single
// letters resolved by their portraits.  Alpha: decompose to the fixed depth
// N = ceil(log2 |W|) and demand every entry be empty.  Beta(i,j): depth
// N = max(N0, ceil(log2 |W|)) where N0 is the last position of the excluded
// symbol, and entries may be empty or the accepted tilded letter e_ij.
// The three deciders define three marked groups on the same 8 generators.

#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "overgroup/oracle.hpp"
#include "overgroup/sections.hpp"
#include "overgroup/words.hpp"

namespace ovg {

// e_ij: the tilded letter whose first-level action is trivial at both i and
// j — {0,1} -> b~, {1,2} -> d~, {2,0} -> c~.  Order of i, j is irrelevant.
KElement beta_letter(Symbol i, Symbol j);

class DeciderFamily {
public:
  enum class Kind : std::uint8_t { exact, alpha, beta };

  static DeciderFamily exact();
  static DeciderFamily alpha();
  static DeciderFamily beta(Symbol i, Symbol j);  // normalized to 01 / 12 / 20

  Kind kind() const { return kind_; }
  bool is_beta() const { return kind_ == Kind::beta; }
  Symbol beta_i() const;
  Symbol beta_j() const;
  Symbol excluded_symbol() const;    // the symbol outside {i, j}
  KElement accepted_letter() const;  // e_ij

  std::string name() const;  // "exact" | "alpha" | "beta-01" | "beta-12" | "beta-20"
  static DeciderFamily from_name(std::string_view name);

  bool operator==(const DeciderFamily&) const = default;

private:
  DeciderFamily(Kind k, Symbol i, Symbol j) : kind_(k), i_(i), j_(j) {}
  Kind kind_;
  Symbol i_, j_;
};

// A marked group: decider family + oracle, generators fixed as the ordered
// tuple (a, b, c, d, x, b~, c~, d~).
struct GroupSpec {
  DeciderFamily family;
  Oracle oracle;

  // "<family>@<oracle>", e.g. "beta-01@121(0)".  Validates.
  static GroupSpec parse(std::string_view text);
  std::string str() const;

  // Beta(i,j) needs the excluded symbol to occur finitely often; throws
  // std::invalid_argument naming the violated constraint otherwise.
  void validate() const;

  bool operator==(const GroupSpec&) const = default;
};

// True iff pi0(k, s) is trivial at every symbol s occurring anywhere in o;
// such a letter has the all-trivial portrait, i.e. is the identity of the
// exact group.
bool generator_trivial(KElement k, const Oracle& o);

struct Verdict {
  bool identity;
  // Alpha/beta: the prescribed decomposition depth N.  Exact: the deepest
  // split performed below the root (memoized results report the depth of
  // the evaluation they cached, keeping the value deterministic).
  int depth_used;
};

// Owns the memo cache for the exact recursion; reuse one instance across a
// ball enumeration or test suite.  Thread-safe; results are independent of
// interleaving.
class Decider {
public:
  static constexpr std::size_t default_max_cache = std::size_t{1} << 22;

  explicit Decider(GroupSpec spec, std::size_t max_cache_entries = default_max_cache);

  const GroupSpec& spec() const { return spec_; }

  Verdict verdict(const ReducedWord& w);
  bool is_identity(const ReducedWord& w) { return verdict(w).identity; }
  bool equal(const ReducedWord& w1, const ReducedWord& w2);

  // Least m <= cap with w^m trivial; nullopt when no power up to cap is.
  std::optional<std::size_t> element_order(const ReducedWord& w, std::size_t cap);

  std::size_t cache_size() const;

private:
  struct CacheEntry {
    bool identity;
    int depth;
  };

  Verdict exact_verdict(const ReducedWord& w, const Oracle& o);
  Verdict modified_verdict(const ReducedWord& w);

  GroupSpec spec_;
  std::size_t max_cache_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, CacheEntry> cache_;
};

}  // namespace ovg
