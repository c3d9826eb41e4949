#include "overgroup/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ovg {

char to_char(Symbol s) { return static_cast<char>('0' + static_cast<int>(s)); }

Symbol symbol_from_char(char c) {
  if (c < '0' || c > '2') {
    throw std::invalid_argument(std::string("oracle symbol must be 0, 1 or 2, got '") + c + "'");
  }
  return static_cast<Symbol>(c - '0');
}

namespace {

// Shortest d dividing the length with q = (q[0..d))^{len/d}.
std::size_t primitive_root_length(const std::vector<Symbol>& q) {
  const std::size_t n = q.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = q[i] == q[i % d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

Oracle::Oracle(std::vector<Symbol> prefix, std::vector<Symbol> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("oracle period must be nonempty");
  period_.resize(primitive_root_length(period_));
  // A prefix symbol equal to the one the rotated period would place there is
  // part of the periodic tail; absorb it (rotation keeps the period primitive).
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Oracle Oracle::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    throw std::invalid_argument("oracle text needs a parenthesized period, e.g. \"12(0)\"");
  }
  if (text.empty() || text.back() != ')') {
    throw std::invalid_argument("oracle text must end with ')'");
  }
  std::vector<Symbol> prefix, period;
  for (std::size_t i = 0; i < open; ++i) prefix.push_back(symbol_from_char(text[i]));
  for (std::size_t i = open + 1; i + 1 < text.size(); ++i) period.push_back(symbol_from_char(text[i]));
  if (period.empty()) throw std::invalid_argument("oracle period must be nonempty");
  return Oracle(std::move(prefix), std::move(period));
}

Symbol Oracle::symbol_at(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("oracle positions are 1-based");
  const std::size_t i = n - 1;
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Oracle Oracle::shift() const {
  if (!prefix_.empty()) {
    return Oracle(std::vector<Symbol>(prefix_.begin() + 1, prefix_.end()), period_);
  }
  std::vector<Symbol> rotated(period_.begin() + 1, period_.end());
  rotated.push_back(period_.front());
  return Oracle({}, std::move(rotated));
}

std::string Oracle::str() const {
  std::string out;
  out.reserve(prefix_.size() + period_.size() + 2);
  for (Symbol s : prefix_) out.push_back(to_char(s));
  out.push_back('(');
  for (Symbol s : period_) out.push_back(to_char(s));
  out.push_back(')');
  return out;
}

OracleClass classify(const Oracle& o) {
  std::vector<Symbol> infinite = o.period();
  std::sort(infinite.begin(), infinite.end());
  infinite.erase(std::unique(infinite.begin(), infinite.end()), infinite.end());

  OracleClass result;
  switch (infinite.size()) {
    case 1: result.cls = OmegaClass::omega2; break;
    case 2: result.cls = OmegaClass::omega1; break;
    default: result.cls = OmegaClass::omega0; break;
  }
  result.infinite_symbols = infinite;
  result.tail_start = 0;
  const auto& prefix = o.prefix();
  for (std::size_t i = prefix.size(); i > 0; --i) {
    if (!std::binary_search(infinite.begin(), infinite.end(), prefix[i - 1])) {
      result.tail_start = i;
      break;
    }
  }
  return result;
}

std::size_t last_occurrence(const Oracle& o, Symbol s) {
  if (std::find(o.period().begin(), o.period().end(), s) != o.period().end()) {
    return infinitely_often;
  }
  const auto& prefix = o.prefix();
  for (std::size_t i = prefix.size(); i > 0; --i) {
    if (prefix[i - 1] == s) return i;
  }
  return 0;
}

}  // namespace ovg
