// The eight-letter alphabet and normal forms in the free product <a> * K.
//
// K is elementary abelian of order 8 on bits (beta_b, beta_c, beta_x); with
// d = b·c and tilded generators = untilded·x, every product relation among
// {b, c, d, x, b~, c~, d~} is a bitwise XOR.  Words reduce to the alternating
// normal form of Z2 * K, which is unique, so word equality in the free
// product is plain sequence equality.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ovg {

struct ResourceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class KElement {
public:
  constexpr KElement() : bits_(0) {}
  constexpr explicit KElement(std::uint8_t bits) : bits_(bits & 7u) {}

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_identity() const { return bits_ == 0; }

  friend constexpr KElement operator*(KElement l, KElement r) {
    return KElement(static_cast<std::uint8_t>(l.bits_ ^ r.bits_));
  }
  constexpr bool operator==(const KElement&) const = default;

  // 'b','c','d','x' and 'B','C','D' for the tilded letters.
  char letter_char() const;

private:
  std::uint8_t bits_;
};

constexpr KElement kmul(KElement k1, KElement k2) { return k1 * k2; }

namespace gen {
inline constexpr KElement b{1}, c{2}, d{3}, x{4}, bt{5}, ct{6}, dt{7};
}

// One letter: the order-2 vertex swap `a`, or a nontrivial element of K.
class Letter {
public:
  static constexpr Letter a() { return Letter(0); }
  static Letter k(KElement e) {
    if (e.is_identity()) throw std::invalid_argument("Letter: identity K-element is not a letter");
    return Letter(e.bits());
  }

  constexpr bool is_a() const { return code_ == 0; }
  constexpr KElement kelem() const { return KElement(code_); }

  // Generator order a < b < c < d < x < b~ < c~ < d~, used for all
  // lexicographic tie-breaking.
  constexpr std::uint8_t rank() const { return code_; }
  char ch() const;

  constexpr bool operator==(const Letter&) const = default;

private:
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

// Alternating normal form: no two adjacent a's, no two adjacent K-letters.
class ReducedWord {
public:
  ReducedWord() = default;

  static ReducedWord reduce(std::span<const Letter> raw);
  static ReducedWord reduce(std::initializer_list<Letter> raw);
  static ReducedWord from_letter(Letter l);
  // Letters a,b,c,d,x and B,C,D (tilded); whitespace ignored; reduces.
  static ReducedWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t a_count() const;

  std::string str() const;  // no whitespace; empty word prints as ""

  // All generators are involutions, so inversion is reversal.
  ReducedWord inverted() const;
  ReducedWord pow(std::size_t e) const;

  bool operator==(const ReducedWord&) const = default;

private:
  struct assume_reduced_t {};
  ReducedWord(std::vector<Letter> letters, assume_reduced_t) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;

  friend ReducedWord concat(const ReducedWord&, const ReducedWord&);
};

ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2);
// g^-1 w g, reduced.
ReducedWord conjugate(const ReducedWord& w, const ReducedWord& g);
// u^-1 v^-1 u v, reduced.
ReducedWord commutator(const ReducedWord& u, const ReducedWord& v);

inline ReducedWord invert(const ReducedWord& w) { return w.inverted(); }
ReducedWord parse_word(std::string_view text);
std::string format_word(const ReducedWord& w);

// True iff u precedes v in shortlex order (length, then generator rank).
bool shortlex_less(const ReducedWord& u, const ReducedWord& v);

// Number of alternating normal forms of exactly / at most the given length:
// 7^floor(L/2) + 7^ceil(L/2) for L >= 1, and 1 for L == 0.
std::size_t count_reduced_words(std::size_t length);
std::size_t count_reduced_words_upto(std::size_t length);

// Visits every reduced word of length <= max_len in shortlex order.
// The callback returns false to stop early; the return value reports
// whether enumeration ran to completion.
bool for_each_reduced_word(std::size_t max_len,
                           const std::function<bool(const ReducedWord&)>& visit);

}  // namespace ovg
