#pragma once

// q-integers, Gaussian binomials and the structure scalars c_i(l), d_i(l)
// that express A^l B^l and B^l A^l as polynomials in C = [A,B].

#include "qheis/scalar.hpp"

namespace qheis {

// {n}_q = 1 + q + ... + q^(n-1); {0}_q = 0.
Scalar q_int(const ScalarContext& ctx, long n);

// Gaussian binomial by the q-Pascal recursion
//   (n+1 choose k+1) = (n choose k) + q^(k+1) (n choose k+1),
// memoized per context. Zero for k > n.
Scalar q_binomial(const ScalarContext& ctx, long n, long k);

// (q - 1)^(-l)
Scalar inv_q_minus_one_pow(const ScalarContext& ctx, long l);

// Coefficient of C^i in A^l B^l. Requires l >= 1 and 0 <= i <= l.
Scalar struct_c(const ScalarContext& ctx, long i, long l);
// Coefficient of C^i in B^l A^l. Requires l >= 1 and 0 <= i <= l.
Scalar struct_d(const ScalarContext& ctx, long i, long l);

// n choose 2 for any integer n.
constexpr long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace qheis
