#include "overgroup/wordproblem.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ovg {

KElement beta_letter(Symbol i, Symbol j) {
  // the unique tilded generator acting trivially at both selected symbols
  int a = static_cast<int>(i), b = static_cast<int>(j);
  if (a == b) throw std::invalid_argument("the two symbols must differ");
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return gen::bt;
  if (a == 1 && b == 2) return gen::dt;
  return gen::ct;  // {0, 2}
}

DeciderFamily DeciderFamily::exact() { return DeciderFamily(Kind::exact, Symbol::zero, Symbol::zero); }
DeciderFamily DeciderFamily::alpha() { return DeciderFamily(Kind::alpha, Symbol::zero, Symbol::zero); }

Symbol DeciderFamily::beta_i() const {
  if (!is_beta()) throw std::logic_error("only the beta families carry a symbol pair");
  return i_;
}

Symbol DeciderFamily::beta_j() const {
  if (!is_beta()) throw std::logic_error("only the beta families carry a symbol pair");
  return j_;
}

DeciderFamily DeciderFamily::beta(Symbol i, Symbol j) {
  int a = static_cast<int>(i), b = static_cast<int>(j);
  if (a == b) throw std::invalid_argument("the two symbols must differ");
  // canonical representatives: (0,1), (1,2), (2,0)
  if ((a == 0 && b == 1) || (a == 1 && b == 0)) return DeciderFamily(Kind::beta, Symbol::zero, Symbol::one);
  if ((a == 1 && b == 2) || (a == 2 && b == 1)) return DeciderFamily(Kind::beta, Symbol::one, Symbol::two);
  return DeciderFamily(Kind::beta, Symbol::two, Symbol::zero);
}

Symbol DeciderFamily::excluded_symbol() const {
  if (!is_beta()) throw std::logic_error("only the beta families exclude a symbol");
  const int sum = static_cast<int>(i_) + static_cast<int>(j_);
  return static_cast<Symbol>(3 - sum);
}

KElement DeciderFamily::accepted_letter() const { return beta_letter(i_, j_); }

std::string DeciderFamily::name() const {
  switch (kind_) {
    case Kind::exact: return "exact";
    case Kind::alpha: return "alpha";
    case Kind::beta: break;
  }
  std::string s = "beta-";
  s += to_char(i_);
  s += to_char(j_);
  return s;
}

DeciderFamily DeciderFamily::from_name(std::string_view name) {
  if (name == "exact") return exact();
  if (name == "alpha") return alpha();
  if (name == "beta-01") return beta(Symbol::zero, Symbol::one);
  if (name == "beta-12") return beta(Symbol::one, Symbol::two);
  if (name == "beta-20") return beta(Symbol::two, Symbol::zero);
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "'; expected exact, alpha, beta-01, beta-12 or beta-20");
}

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("group spec must look like <family>@<oracle>, e.g. exact@(012)");
  }
  GroupSpec s{DeciderFamily::from_name(text.substr(0, at)), Oracle::parse(text.substr(at + 1))};
  s.validate();
  return s;
}

std::string GroupSpec::str() const { return family.name() + "@" + oracle.str(); }

void GroupSpec::validate() const {
  if (!family.is_beta()) return;
  const Symbol ex = family.excluded_symbol();
  if (last_occurrence(oracle, ex) == infinitely_often) {
    throw std::invalid_argument("family " + family.name() + " needs the symbol " +
                                std::string(1, to_char(ex)) +
                                " to stop occurring eventually, but it repeats forever in " +
                                oracle.str());
  }
}

bool generator_trivial(KElement k, const Oracle& o) {
  // trivial iff pi0 vanishes at every symbol the oracle ever uses
  for (Symbol s : o.prefix()) {
    if (pi0(k, s) == FirstLevelAction::swap) return false;
  }
  for (Symbol s : o.period()) {
    if (pi0(k, s) == FirstLevelAction::swap) return false;
  }
  return true;
}

Decider::Decider(GroupSpec spec, std::size_t max_cache_entries)
    : spec_(std::move(spec)), max_cache_(max_cache_entries) {
  spec_.validate();
}

Verdict Decider::exact_verdict(const ReducedWord& w, const Oracle& o) {
  if (w.empty()) return {true, 0};
  if (w.length() == 1) {
    Letter l = w.letters()[0];
    if (l.is_a()) return {false, 0};
    return {generator_trivial(l.kelem(), o), 0};
  }
  if (!even_a_parity(w)) return {false, 0};

  const std::string key = w.str() + "@" + o.str();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return {it->second.identity, it->second.depth};
  }

  auto [left, right] = split(w, o);
  const Oracle shifted = o.shift();
  // evaluate both children regardless, so depth_used reports the full
  // exploration deterministically
  Verdict vl = exact_verdict(left, shifted);
  Verdict vr = exact_verdict(right, shifted);
  Verdict v{vl.identity && vr.identity, 1 + std::max(vl.depth_used, vr.depth_used)};

  std::lock_guard<std::mutex> lock(mu_);
  if (cache_.size() >= max_cache_) {
    throw ResourceLimitExceeded("word-problem cache exceeded " + std::to_string(max_cache_) +
                                " entries");
  }
  cache_.emplace(key, CacheEntry{v.identity, v.depth_used});
  return v;
}

Verdict Decider::modified_verdict(const ReducedWord& w) {
  const Oracle& o = spec_.oracle;
  int n = alpha_depth(w.length());
  if (spec_.family.is_beta()) {
    const std::size_t last = last_occurrence(o, spec_.family.excluded_symbol());
    n = std::max(n, static_cast<int>(last));
  }

  // expand to level n, failing on any odd a-parity along the way
  std::vector<ReducedWord> level{w};
  Oracle level_oracle = o;
  for (int l = 0; l < n; ++l) {
    std::vector<ReducedWord> next;
    next.reserve(level.size() * 2);
    for (const ReducedWord& word : level) {
      if (!even_a_parity(word)) return {false, l};
      auto [left, right] = split(word, level_oracle);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    level = std::move(next);
    level_oracle = level_oracle.shift();
  }

  if (spec_.family.kind() == DeciderFamily::Kind::alpha) {
    for (const ReducedWord& word : level) {
      if (!word.empty()) return {false, n};
    }
    return {true, n};
  }

  // beta: every depth-n entry must be the accepted letter or empty
  const KElement accepted = spec_.family.accepted_letter();
  for (const ReducedWord& word : level) {
    if (word.empty()) continue;
    if (word.length() == 1) {
      Letter l = word.letters()[0];
      if (!l.is_a() && l.kelem() == accepted) continue;
    }
    return {false, n};
  }
  return {true, n};
}

Verdict Decider::verdict(const ReducedWord& w) {
  if (spec_.family.kind() == DeciderFamily::Kind::exact) {
    return exact_verdict(w, spec_.oracle);
  }
  return modified_verdict(w);
}

bool Decider::equal(const ReducedWord& w1, const ReducedWord& w2) {
  return is_identity(concat(w1, w2.inverted()));
}

std::optional<std::size_t> Decider::element_order(const ReducedWord& w, std::size_t cap) {
  ReducedWord power;
  for (std::size_t k = 1; k <= cap; ++k) {
    power = concat(power, w);
    if (is_identity(power)) return k;
  }
  return std::nullopt;
}

std::size_t Decider::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

}  // namespace ovg
