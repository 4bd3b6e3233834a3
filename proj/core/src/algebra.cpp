#include "qheis/algebra.hpp"

#include <stdexcept>

#include "qheis/qcombinatorics.hpp"

namespace qheis {

namespace {

// C^m A^n * B^l C^k
void mixed_ab(const ScalarContext& ctx, long m, long n, long l, long k, const Scalar& w,
              Element& out) {
  if (n >= l) {
    for (long i = 0; i <= l; ++i)
      out.add_term(Monomial::c_a(m + i + k, n - l),
                   w * Scalar::q_power(ctx, (i + k) * (n - l)) * struct_c(ctx, i, l));
  } else {
    for (long i = 0; i <= n; ++i)
      out.add_term(Monomial::b_c(l - n, m + i + k),
                   w * Scalar::q_power(ctx, (m + i) * (l - n)) * struct_c(ctx, i, n));
  }
}

// B^n C^m * C^k A^l
void mixed_ba(const ScalarContext& ctx, long n, long m, long k, long l, const Scalar& w,
              Element& out) {
  if (n >= l) {
    const Scalar shift = w * Scalar::q_power(ctx, -(m + k) * l);
    for (long i = 0; i <= l; ++i)
      out.add_term(Monomial::b_c(n - l, m + k + i), shift * struct_d(ctx, i, l));
  } else {
    const Scalar shift = w * Scalar::q_power(ctx, -(m + k) * n);
    for (long i = 0; i <= n; ++i)
      out.add_term(Monomial::c_a(i + m + k, l - n), shift * struct_d(ctx, i, n));
  }
}

// Accumulates w * (x * y) into out.
void accumulate_product(const ScalarContext& ctx, const Monomial& x, const Monomial& y,
                        const Scalar& w, Element& out) {
  const long m = x.k, k = y.k;
  if (x.d == 0) {
    if (y.d <= 0)
      out.add_term({m + k, y.d}, w);
    else
      out.add_term({m + k, y.d}, w * Scalar::q_power(ctx, m * y.d));
    return;
  }
  if (x.d < 0) {
    const long n = -x.d;
    if (y.d <= 0)  // C^m A^n * C^k (A^l)
      out.add_term({m + k, x.d + y.d}, w * Scalar::q_power(ctx, n * k));
    else
      mixed_ab(ctx, m, n, y.d, k, w, out);
    return;
  }
  const long n = x.d;
  if (y.d == 0)
    out.add_term({m + k, n}, w);
  else if (y.d > 0)
    out.add_term({m + k, n + y.d}, w * Scalar::q_power(ctx, m * y.d));
  else
    mixed_ba(ctx, n, m, k, -y.d, w, out);
}

}  // namespace

Element multiply_monomials(const ScalarContext& ctx, const Monomial& x, const Monomial& y) {
  Element out(ctx);
  accumulate_product(ctx, x, y, Scalar::one(ctx), out);
  return out;
}

Element multiply(const Element& x, const Element& y) {
  require_same_context(x, y);
  const auto& ctx = x.context();
  Element out(ctx);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) accumulate_product(ctx, mx, my, cx * cy, out);
  return out;
}

Element commutator(const Element& x, const Element& y) {
  return multiply(x, y) - multiply(y, x);
}

Element power(const Element& x, long n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Element result(x.context(), Monomial::identity());
  for (long i = 0; i < n; ++i) result = multiply(result, x);
  return result;
}

}  // namespace qheis
