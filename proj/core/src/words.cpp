#include "overgroup/words.hpp"

#include <array>
#include <cctype>

namespace ovg {

namespace {
constexpr std::array<char, 7> k_chars = {'b', 'c', 'd', 'x', 'B', 'C', 'D'};
}

char KElement::letter_char() const {
  if (bits_ == 0) throw std::logic_error("identity K-element has no letter");
  return k_chars[bits_ - 1];
}

char Letter::ch() const { return code_ == 0 ? 'a' : KElement(code_).letter_char(); }

ReducedWord ReducedWord::reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (stack.empty()) {
      stack.push_back(l);
      continue;
    }
    const Letter top = stack.back();
    if (top.is_a() && l.is_a()) {
      stack.pop_back();  // a·a = 1
    } else if (!top.is_a() && !l.is_a()) {
      stack.pop_back();
      const KElement m = top.kelem() * l.kelem();
      if (!m.is_identity()) stack.push_back(Letter::k(m));
      // a trivial product exposes an `a` (or nothing) beneath; the next
      // letter cancels against it in a later iteration
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(std::move(stack), assume_reduced_t{});
}

ReducedWord ReducedWord::reduce(std::initializer_list<Letter> raw) {
  return reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

ReducedWord ReducedWord::from_letter(Letter l) {
  return ReducedWord(std::vector<Letter>{l}, assume_reduced_t{});
}

ReducedWord ReducedWord::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'a') {
      raw.push_back(Letter::a());
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < k_chars.size(); ++i) {
      if (k_chars[i] == c) {
        raw.push_back(Letter::k(KElement(static_cast<std::uint8_t>(i + 1))));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(std::string("unknown letter '") + c +
                                  "'; expected one of a b c d x B C D");
    }
  }
  return reduce(raw);
}

std::size_t ReducedWord::a_count() const {
  std::size_t n = 0;
  for (Letter l : letters_) n += l.is_a();
  return n;
}

std::string ReducedWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.ch());
  return out;
}

ReducedWord ReducedWord::inverted() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  return ReducedWord(std::move(rev), assume_reduced_t{});
}

ReducedWord ReducedWord::pow(std::size_t e) const {
  ReducedWord acc;
  for (std::size_t i = 0; i < e; ++i) acc = concat(acc, *this);
  return acc;
}

ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2) {
  std::vector<Letter> raw;
  raw.reserve(w1.length() + w2.length());
  raw.insert(raw.end(), w1.letters().begin(), w1.letters().end());
  raw.insert(raw.end(), w2.letters().begin(), w2.letters().end());
  return ReducedWord::reduce(raw);
}

ReducedWord conjugate(const ReducedWord& w, const ReducedWord& g) {
  return concat(concat(g.inverted(), w), g);
}

ReducedWord commutator(const ReducedWord& u, const ReducedWord& v) {
  return concat(concat(u.inverted(), v.inverted()), concat(u, v));
}

ReducedWord parse_word(std::string_view text) { return ReducedWord::parse(text); }

std::string format_word(const ReducedWord& w) { return w.str(); }

bool shortlex_less(const ReducedWord& u, const ReducedWord& v) {
  if (u.length() != v.length()) return u.length() < v.length();
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u.letters()[i].rank() != v.letters()[i].rank()) {
      return u.letters()[i].rank() < v.letters()[i].rank();
    }
  }
  return false;
}

std::size_t count_reduced_words(std::size_t length) {
  if (length == 0) return 1;
  auto pow7 = [](std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= 7;
    return r;
  };
  return pow7(length / 2) + pow7((length + 1) / 2);
}

std::size_t count_reduced_words_upto(std::size_t length) {
  std::size_t total = 0;
  for (std::size_t l = 0; l <= length; ++l) total += count_reduced_words(l);
  return total;
}

namespace {

bool enumerate_from(std::vector<Letter>& word, std::size_t target_len,
                    const std::function<bool(const ReducedWord&)>& visit) {
  if (word.size() == target_len) {
    ReducedWord w = ReducedWord::reduce(word);  // already alternating; cheap
    return visit(w);
  }
  const bool need_k = !word.empty() && word.back().is_a();
  const bool need_a = !word.empty() && !word.back().is_a();
  if (!need_k) {
    if (!need_a) {  // empty so far: 'a' first (lowest rank)
      word.push_back(Letter::a());
      if (!enumerate_from(word, target_len, visit)) return false;
      word.pop_back();
      for (std::uint8_t bits = 1; bits <= 7; ++bits) {
        word.push_back(Letter::k(KElement(bits)));
        if (!enumerate_from(word, target_len, visit)) return false;
        word.pop_back();
      }
      return true;
    }
    word.push_back(Letter::a());
    if (!enumerate_from(word, target_len, visit)) return false;
    word.pop_back();
    return true;
  }
  for (std::uint8_t bits = 1; bits <= 7; ++bits) {
    word.push_back(Letter::k(KElement(bits)));
    if (!enumerate_from(word, target_len, visit)) return false;
    word.pop_back();
  }
  return true;
}

}  // namespace

bool for_each_reduced_word(std::size_t max_len,
                           const std::function<bool(const ReducedWord&)>& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Letter> word;
    word.reserve(len);
    if (!enumerate_from(word, len, visit)) return false;
  }
  return true;
}

}  // namespace ovg
