#pragma once

// Multiplication in H(q) by structure constants.
//
// Products of basis monomials follow the nine cases of the structure table:
//
//              C^k          C^k A^l           B^l C^k
//   C^m        C^(m+k)      C^(m+k) A^l       q^(ml) B^l C^(m+k)
//   C^m A^n    q^(nk) ...   q^(nk) ...        mixed, split on n >= l
//   B^n C^m    B^n C^(m+k)  mixed, n >= l     q^(ml) B^(n+l) C^(m+k)
//
// The mixed cases go through A^l B^l = sum c_i(l) C^i and
// B^l A^l = sum d_i(l) C^i.

#include "qheis/element.hpp"

namespace qheis {

Element multiply_monomials(const ScalarContext& ctx, const Monomial& x, const Monomial& y);

// Throws ContextMismatch if contexts differ.
Element multiply(const Element& x, const Element& y);

// [x, y] = xy - yx
Element commutator(const Element& x, const Element& y);

// x^n for n >= 0 (x^0 = I).
Element power(const Element& x, long n);

}  // namespace qheis
