#pragma once

// Simplifications available when q is a primitive p-th root of unity.
//
// The central facts used here: A^p and B^p are central, and
//   A^p B^p = B^p A^p = (I - C^p) / (1 - q)^p =: U.
// Writing l = s*p + r with 0 <= r < p, this gives
//   A^l B^l = U^s * sum_i c_i(r) C^i,   B^l A^l = U^s * sum_i d_i(r) C^i,
// which is what the fast multiplication path uses once both mixed exponents
// reach p.

#include "qheis/element.hpp"

namespace qheis {

struct ReducedExponent {
  long value = 0;  // in [0, p)
  friend bool operator==(const ReducedExponent&, const ReducedExponent&) = default;
};

// Least nonnegative residue of n mod p. Negative n is accepted.
ReducedExponent reduce_exponent(const ScalarContext& ctx, long n);

// The two-term closed form (I - (-1)^l C^l) / (1 - q)^l proposed for
// A^l B^l and B^l A^l when l >= p. It agrees with the true products only
// for some (p, l); verify_pow_product_identity() reports which.
Element pow_product_identity(const ScalarContext& ctx, long l);

// A^l B^l and B^l A^l for l >= p, via the central factor U.
Element a_pow_b_pow(const ScalarContext& ctx, long l);
Element b_pow_a_pow(const ScalarContext& ctx, long l);

// Same result as multiply(); mixed products with both exponents >= p go
// through a_pow_b_pow / b_pow_a_pow and reduced q-exponents.
Element multiply_fastpath(const Element& x, const Element& y);
Element multiply_monomials_fastpath(const ScalarContext& ctx, const Monomial& x, const Monomial& y);

// [x, A] = 0 and [x, B] = 0.
bool is_central(const Element& x);

}  // namespace qheis
