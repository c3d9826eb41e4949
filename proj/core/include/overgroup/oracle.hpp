// Eventually periodic oracle sequences over {0, 1, 2}.
//
// An oracle drives the self-similar structure of every group in this
// library: the symbol at position n selects which defining functional is
// applied at tree level n.  Oracles are stored in canonical form (shortest
// preperiod + primitive period), which is the unique representation of an
// eventually periodic sequence, so value equality coincides with sequence
// equality and canonical text is a stable cache key.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ovg {

enum class Symbol : std::uint8_t { zero = 0, one = 1, two = 2 };

char to_char(Symbol s);
Symbol symbol_from_char(char c);  // throws std::invalid_argument

// Returned by last_occurrence when the symbol lies in the period.
inline constexpr std::size_t infinitely_often = static_cast<std::size_t>(-1);

class Oracle {
public:
  // Canonicalizes: the period is reduced to its primitive root and prefix
  // symbols that merely replay the period are absorbed into it.
  Oracle(std::vector<Symbol> prefix, std::vector<Symbol> period);

  // Grammar: [012]* "(" [012]+ ")", e.g. "12(0)" denotes 1,2,0,0,0,...
  static Oracle parse(std::string_view text);

  const std::vector<Symbol>& prefix() const { return prefix_; }
  const std::vector<Symbol>& period() const { return period_; }

  // 1-based position in the infinite sequence; throws on n == 0.
  Symbol symbol_at(std::size_t n) const;

  // The left shift: symbol_at(shift(), n) == symbol_at(n + 1).
  Oracle shift() const;

  // Canonical text in the parse grammar; parse(str()) == *this.
  std::string str() const;

  bool operator==(const Oracle&) const = default;

private:
  std::vector<Symbol> prefix_;
  std::vector<Symbol> period_;
};

enum class OmegaClass : std::uint8_t {
  omega0,  // all three symbols recur forever
  omega1,  // exactly two do
  omega2,  // eventually constant
};

struct OracleClass {
  OmegaClass cls;
  std::vector<Symbol> infinite_symbols;  // ascending; the period's symbol set
  // Smallest N such that every symbol strictly after position N recurs
  // forever; 0 when that already holds from position 1.
  std::size_t tail_start;
};

OracleClass classify(const Oracle& o);

// Largest 1-based index where s occurs: 0 if it never occurs,
// infinitely_often if it lies in the period.
std::size_t last_occurrence(const Oracle& o, Symbol s);

}  // namespace ovg
