// Witness-word machinery: v_n conjugates of a spine letter, the xi0/xi1
// substitutions and the vertex words they generate, the beta-witness words
// W(ij), and the letterwise map f identifying the beta-01 group of a
// constant-0 oracle with the alpha group on four letters.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "overgroup/oracle.hpp"
#include "overgroup/wordproblem.hpp"
#include "overgroup/words.hpp"

namespace ovg {

// y is a spine letter for o when pi0(y, s) is trivial at every symbol of o:
// its depth-n decomposition is then y at vertex 1^n and empty elsewhere.
// At a constant-0 oracle these are d, b~, c~.
bool is_spine_letter(KElement y, const Oracle& o);

// v_n = y conjugated by (ax)^n for n >= 0, and by (ax)^(-n-1)·a for n < 0;
// an alternating word of length 4n+1 resp. 4|n|-1.
ReducedWord v_word(KElement y, long long n);

// Letterwise substitution on words over {a, x, y}, then reduce.
//   rule 0:  a -> x,    x -> axa,  y -> aya
//   rule 1:  a -> axa,  x -> x,    y -> y
// Satisfies xi(1, v_n) = v_{2n} and xi(0, v_n) = v_{-2n-1}.
ReducedWord xi(int rule, const ReducedWord& w, KElement y);

// V at a tree vertex: V_empty = v_0 and V_{i1 i2...in} = xi_{i1}(V_{i2...in}).
// Always some v_k; its depth-|path| decomposition is y exactly at `path`.
ReducedWord V_word(KElement y, std::string_view path);

// The k with V_word(y, path) == v_word(y, k): fold k -> 2k (bit 1) /
// k -> -2k-1 (bit 0) right to left from 0.
long long v_index(std::string_view path);

// Decomposition of an eventually constant oracle around the LAST run of the
// excluded symbol ell: omega = head · ell^kappa · eta · tail^inf, with the
// head ending in a non-ell symbol and eta free of ell and not ending in the
// tail symbol.  Absent when ell never occurs.
struct Omega2Shape {
  std::vector<Symbol> head;
  std::size_t kappa = 0;
  std::vector<Symbol> eta;
  Symbol ell;
  Symbol tail;
};
std::optional<Omega2Shape> omega2_shape(const Oracle& o, Symbol i, Symbol j);

// The beta-(i,j) witness word for an eventually constant oracle whose tail
// symbol lies in {i, j}: trivial under beta-(i,j), nontrivial under alpha
// and under the other applicable beta family.
//
// With U = e_ij, u = U·x, and the shape above: X_m = U when head[m] == ell
// else u; the tower C_1 = X_1^a, C_m = X_m^{C_{m-1}} gives Y = C_n; and
// W = ((U·Y)^2)^(2^kappa).  When ell never occurs, W = e_ij itself.  An
// empty head (the oracle starts inside the ell-run) degenerates the tower
// to its bare conjugator, Y = a.
struct WijResult {
  ReducedWord word;
  bool degenerate = false;  // empty head
};
WijResult w_ij(const Oracle& o, Symbol i, Symbol j);

// Letterwise a->a, b->b, c->c, d->d, x->b, b~->1, c~->d, d~->c, then reduce.
ReducedWord f_map(const ReducedWord& w);

}  // namespace ovg
