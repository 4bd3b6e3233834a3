#pragma once

// Explicit Lie polynomials in A, B built from iterated ad-chains, their
// closed forms, and the recipes that isolate each Lie basis monomial.
//
// With ad X : Y -> [X, Y] and C = [A, B]:
//   base_a(k, l) = (-ad C)^k (-ad A)^(l+1) (B)
//   base_b(k, l) = (ad B)^(l-1) (ad C)^k ([B, [B, A]])
//   base_g(k)    = (ad B) (-ad C)^k ([[B, A], A])

#include <string>

#include "qheis/bracket_expr.hpp"
#include "qheis/classify.hpp"

namespace qheis {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BracketExpr base_a_expr(long k, long l);
BracketExpr base_b_expr(long k, long l);
BracketExpr base_g_expr(long k);

Element base_a(const ScalarContext& ctx, long k, long l);
Element base_b(const ScalarContext& ctx, long k, long l);
Element base_g(const ScalarContext& ctx, long k);

// Proposed closed forms:
//   base_a(k,l) = -(1-q)^l (q^l-1)^k C^(k+1) A^l
//   base_b(k,l) = (q-1)^(k+1) (1-q^(k+1))^(l-1) B^l C^(k+1)
//   base_g(k)   = q^-k (q-1)^(k+1) (q {k}_q C^(k+1) - {k+1}_q C^(k+2))
// The first two match the bracket evaluation. The third does not; the
// evaluation gives base_g_closed_corrected:
//   base_g(k)   = q^-(k+1) (q-1)^(k+1) ({k+1}_q C^(k+1) - {k+2}_q C^(k+2))
Element base_a_closed(const ScalarContext& ctx, long k, long l);
Element base_b_closed(const ScalarContext& ctx, long k, long l);
Element base_g_closed(const ScalarContext& ctx, long k);
Element base_g_closed_corrected(const ScalarContext& ctx, long k);

// q^k sum_{i<=k} (q-1)^-(i+1) base_g(i), proposed to equal -{k+1}_q C^(k+2).
Element base_g_weighted_sum(const ScalarContext& ctx, long k);

// Normalized constructors, proposed to evaluate to the single monomials
// C^(k+1) A^l, B^l C^(k+1), C^(k+2) respectively. obase_a and obase_b do;
// obase_g inherits the base_g discrepancy and does not. Throws
// ConstructionError naming the failed congruence:
//   obase_a: l not divisible by p;  obase_b, obase_g: k+1 not divisible by p.
BracketExpr obase_a_expr(const ScalarContext& ctx, long k, long l);
BracketExpr obase_b_expr(const ScalarContext& ctx, long k, long l);
BracketExpr obase_g_expr(const ScalarContext& ctx, long k);
Element obase_a(const ScalarContext& ctx, long k, long l);
Element obase_b(const ScalarContext& ctx, long k, long l);
Element obase_g(const ScalarContext& ctx, long k);

// [obase_a(k, l-1), A] for l divisible by p and k+1 not:
// equals (1 - q^(k+1)) C^(k+1) A^l.
Element wrapped_a(const ScalarContext& ctx, long k, long l);
// [obase_b(k-1, l), C] for k+1 divisible by p and l not:
// equals (1 - q^l) B^l C^(k+1).
Element wrapped_b(const ScalarContext& ctx, long k, long l);

struct Construction {
  std::string recipe;
  BracketExpr expr;
  Element value;
};

// Witness for a Lie basis monomial; value equals m with coefficient 1.
// Rejects monomials that are not Lie polynomials, and C^n with n divisible
// by p, which no bracket expression reaches.
//
// C^n for n - 1 not divisible by p uses the telescoping sum
//   {n}_q C^n = C - sum_{i=0}^{n-2} q^(i+1) (q-1)^-(i+1) base_g(i).
Construction construct_basis_element(const ScalarContext& ctx, const Monomial& m);

}  // namespace qheis
