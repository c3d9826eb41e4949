#include "overgroup/constructions.hpp"

#include <stdexcept>
#include <string>

#include "overgroup/sections.hpp"

namespace ovg {

bool is_spine_letter(KElement y, const Oracle& o) {
  return !y.is_identity() && generator_trivial(y, o);
}

ReducedWord v_word(KElement y, long long n) {
  const Letter ly = Letter::k(y);
  const Letter la = Letter::a();
  const Letter lx = Letter::k(gen::x);
  std::vector<Letter> letters;
  const bool negative = n < 0;
  const std::size_t m = negative ? static_cast<std::size_t>(-(n + 1)) : static_cast<std::size_t>(n);
  letters.reserve(4 * m + 3);
  if (negative) letters.push_back(la);
  for (std::size_t i = 0; i < m; ++i) {
    letters.push_back(lx);
    letters.push_back(la);
  }
  letters.push_back(ly);
  for (std::size_t i = 0; i < m; ++i) {
    letters.push_back(la);
    letters.push_back(lx);
  }
  if (negative) letters.push_back(la);
  return ReducedWord::reduce(letters);
}

ReducedWord xi(int rule, const ReducedWord& w, KElement y) {
  if (rule != 0 && rule != 1) throw std::invalid_argument("substitution rule must be 0 or 1");
  if (y.is_identity() || y == gen::x) {
    throw std::invalid_argument("the designated letter must be a K-letter other than x");
  }
  const Letter la = Letter::a();
  const Letter lx = Letter::k(gen::x);
  const Letter ly = Letter::k(y);
  std::vector<Letter> out;
  out.reserve(3 * w.length());
  for (Letter l : w.letters()) {
    if (l != la && l != lx && l != ly) {
      throw std::invalid_argument(std::string("letter '") + l.ch() +
                                  "' is outside the substitution alphabet {a, x, " + ly.ch() + "}");
    }
    if (rule == 0) {
      // a -> x, x -> axa, y -> aya
      if (l == la) {
        out.push_back(lx);
      } else {
        out.push_back(la);
        out.push_back(l);
        out.push_back(la);
      }
    } else {
      // a -> axa, x -> x, y -> y
      if (l == la) {
        out.push_back(la);
        out.push_back(lx);
        out.push_back(la);
      } else {
        out.push_back(l);
      }
    }
  }
  return ReducedWord::reduce(out);
}

ReducedWord V_word(KElement y, std::string_view path) {
  if (path.size() > 20) {
    throw ResourceLimitExceeded("vertex word for a depth-" + std::to_string(path.size()) +
                                " path has on the order of 2^" + std::to_string(path.size() + 2) +
                                " letters");
  }
  ReducedWord w = v_word(y, 0);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (*it != '0' && *it != '1') throw std::invalid_argument("vertex path must be a bit string");
    w = xi(*it - '0', w, y);
  }
  return w;
}

long long v_index(std::string_view path) {
  if (path.size() > 60) throw std::invalid_argument("vertex path longer than 60 bits overflows the index");
  long long k = 0;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (*it == '1') {
      k = 2 * k;
    } else if (*it == '0') {
      k = -2 * k - 1;
    } else {
      throw std::invalid_argument("vertex path must be a bit string");
    }
  }
  return k;
}

std::optional<Omega2Shape> omega2_shape(const Oracle& o, Symbol i, Symbol j) {
  (void)beta_letter(i, j);  // validates i != j
  const Symbol ell = static_cast<Symbol>(3 - static_cast<int>(i) - static_cast<int>(j));
  const OracleClass cls = classify(o);
  if (cls.cls != OmegaClass::omega2) {
    throw std::invalid_argument("the witness decomposition needs an eventually constant oracle; " +
                                o.str() + " is not");
  }
  const Symbol tail = o.period()[0];
  if (tail != i && tail != j) {
    throw std::invalid_argument("the oracle " + o.str() + " ends in " +
                                std::string(1, to_char(tail)) +
                                "^inf, which is outside the selected pair {" +
                                std::string(1, to_char(i)) + ", " + to_char(j) + "}");
  }

  const std::vector<Symbol>& prefix = o.prefix();
  std::size_t last = prefix.size();
  for (std::size_t p = prefix.size(); p > 0; --p) {
    if (prefix[p - 1] == ell) {
      last = p - 1;
      break;
    }
  }
  if (last == prefix.size()) return std::nullopt;  // ell never occurs

  std::size_t run_start = last;
  while (run_start > 0 && prefix[run_start - 1] == ell) --run_start;

  Omega2Shape shape;
  shape.head.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(run_start));
  shape.kappa = last - run_start + 1;
  shape.eta.assign(prefix.begin() + static_cast<std::ptrdiff_t>(last + 1), prefix.end());
  shape.ell = ell;
  shape.tail = tail;
  return shape;
}

WijResult w_ij(const Oracle& o, Symbol i, Symbol j) {
  const KElement U = beta_letter(i, j);
  const std::optional<Omega2Shape> shape = omega2_shape(o, i, j);
  if (!shape) return {ReducedWord::from_letter(Letter::k(U)), false};

  const KElement u = kmul(U, gen::x);
  const ReducedWord a_word = ReducedWord::from_letter(Letter::a());

  ReducedWord y = a_word;
  const bool degenerate = shape->head.empty();
  if (!degenerate) {
    // C_1 = X_1^a, C_m = X_m^{C_{m-1}}, with X_m keyed to the m-th oracle
    // symbol: the tilded letter on ell, its untilded partner elsewhere
    ReducedWord conjugator = a_word;
    for (Symbol s : shape->head) {
      const KElement xm = (s == shape->ell) ? U : u;
      conjugator = conjugate(ReducedWord::from_letter(Letter::k(xm)), conjugator);
    }
    y = conjugator;
  }

  const ReducedWord uy = concat(ReducedWord::from_letter(Letter::k(U)), y);
  ReducedWord w = concat(uy, uy);
  constexpr std::size_t max_letters = std::size_t{1} << 22;
  for (std::size_t s = 0; s < shape->kappa; ++s) {
    if (w.length() > max_letters / 2) {
      throw ResourceLimitExceeded("witness word exceeds " + std::to_string(max_letters) +
                                  " letters while doubling");
    }
    w = concat(w, w);
  }
  return {std::move(w), degenerate};
}

ReducedWord f_map(const ReducedWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) {
    if (l.is_a()) {
      out.push_back(l);
      continue;
    }
    const std::uint8_t bits = l.kelem().bits();
    // (beta_b, beta_c, beta_x) -> (beta_b XOR beta_x, beta_c, 0)
    const std::uint8_t image = static_cast<std::uint8_t>(((bits ^ (bits >> 2)) & 1u) | (bits & 2u));
    if (image != 0) out.push_back(Letter::k(KElement(image)));
  }
  return ReducedWord::reduce(out);
}

}  // namespace ovg
