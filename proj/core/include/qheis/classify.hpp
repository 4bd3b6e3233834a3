#pragma once

// Which basis monomials of H(q), q of torsion order p, are Lie polynomials
// in A and B.
//
// Grade 0:      C^k is Lie for k >= 1; I is not.
// Grade -l:     C^k A^l is Lie iff (k = 0 and l = 1) or (k >= 1 and not both
//               k, l divisible by p).  Symmetrically for B^l C^k.
// The monomials with k, |d| >= 1 both divisible by p span the subspace N,
// which no commutator of basis monomials ever touches.

#include <string>

#include "qheis/element.hpp"

namespace qheis {

enum class LieBasisConvention {
  // All C^n (n >= 1) are Lie, as produced by the explicit constructions.
  Constructive,
  // Additionally excludes C^n with n >= 2 and n - 1 divisible by p.
  ExcludeShiftedCPowers,
  // Additionally excludes C^n with n divisible by p. These are central and
  // never occur in a commutator of basis monomials.
  ExcludeCentralCPowers,
};

// "constructive", "exclude-shifted-c-powers", "exclude-central-c-powers"
std::string to_string(LieBasisConvention c);

struct MonomialClass {
  bool is_lie = false;
  bool in_n = false;  // only meaningful when !is_lie
  std::string reason;
  friend bool operator==(const MonomialClass& a, const MonomialClass& b) {
    return a.is_lie == b.is_lie && a.in_n == b.in_n;
  }
};

// True if n vanishes mod p (torsion), or n == 0 (generic).
bool divisible_by_order(const ScalarContext& ctx, long n);

MonomialClass classify_monomial(const ScalarContext& ctx, const Monomial& m,
                                LieBasisConvention convention = LieBasisConvention::Constructive);

bool in_n_subspace(const ScalarContext& ctx, const Monomial& m);

struct Membership {
  bool is_lie;
  Element residual;  // terms of x on non-Lie monomials
};

Membership is_lie_polynomial(const Element& x,
                             LieBasisConvention convention = LieBasisConvention::Constructive);

// Component of x on N.
Element project_n(const Element& x);

}  // namespace qheis
