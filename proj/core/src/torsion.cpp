#include "qheis/torsion.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qheis/algebra.hpp"
#include "qheis/qcombinatorics.hpp"

namespace qheis {

namespace {

void require_torsion(const ScalarContext& ctx, const char* what) {
  if (!ctx.is_torsion()) throw std::invalid_argument(std::string(what) + " requires a torsion context");
}

Scalar q_reduced(const ScalarContext& ctx, long n) {
  return Scalar::q_power(ctx, reduce_exponent(ctx, n).value);
}

// Dense coefficients of a polynomial in C.
using CPoly = std::vector<Scalar>;

CPoly cpoly_mul(const ScalarContext& ctx, const CPoly& a, const CPoly& b) {
  CPoly out(a.size() + b.size() - 1, Scalar::zero(ctx));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

// A^l B^l (a_first) or B^l A^l as a polynomial in C, l >= p.
CPoly power_product(const ScalarContext& ctx, long l, bool a_first) {
  const long p = ctx.order();
  const long s = l / p, r = l % p;
  const Scalar scale = (Scalar::one(ctx) - Scalar::q_power(ctx, 1)).pow(-p);
  CPoly central(p + 1, Scalar::zero(ctx));
  central[0] = scale;
  central[p] = -scale;
  CPoly out{Scalar::one(ctx)};
  for (long i = 0; i < s; ++i) out = cpoly_mul(ctx, out, central);
  if (r > 0) {
    CPoly rest;
    for (long i = 0; i <= r; ++i) rest.push_back(a_first ? struct_c(ctx, i, r) : struct_d(ctx, i, r));
    out = cpoly_mul(ctx, out, rest);
  }
  return out;
}

Element cpoly_element(const ScalarContext& ctx, const CPoly& poly) {
  Element out(ctx);
  for (std::size_t j = 0; j < poly.size(); ++j) out.add_term(Monomial::c_power(j), poly[j]);
  return out;
}

void accumulate_fast(const ScalarContext& ctx, const Monomial& x, const Monomial& y,
                     const Scalar& w, Element& out) {
  const long p = ctx.order();
  const long m = x.k, k = y.k;
  if (x.d < 0 && y.d > 0 && std::min(-x.d, y.d) >= p) {
    const long n = -x.d, l = y.d;
    if (n >= l) {
      // C^m A^(n-l) (A^l B^l) C^k
      const CPoly poly = power_product(ctx, l, true);
      for (std::size_t j = 0; j < poly.size(); ++j)
        if (!poly[j].is_zero())
          out.add_term(Monomial::c_a(m + j + k, n - l), w * poly[j] * q_reduced(ctx, (n - l) * (j + k)));
    } else {
      // C^m (A^n B^n) B^(l-n) C^k
      const CPoly poly = power_product(ctx, n, true);
      for (std::size_t j = 0; j < poly.size(); ++j)
        if (!poly[j].is_zero())
          out.add_term(Monomial::b_c(l - n, m + j + k), w * poly[j] * q_reduced(ctx, (m + j) * (l - n)));
    }
    return;
  }
  if (x.d > 0 && y.d < 0 && std::min(x.d, -y.d) >= p) {
    const long n = x.d, l = -y.d;
    const long e = std::min(n, l);
    // B^(n-e) (B^e A^e) C^(m+k) A^(l-e), moving A^e past C^(m+k).
    const CPoly poly = power_product(ctx, e, false);
    const Scalar shift = w * q_reduced(ctx, -(m + k) * e);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      if (poly[j].is_zero()) continue;
      const Monomial target = n >= l ? Monomial::b_c(n - l, m + k + j) : Monomial::c_a(m + k + j, l - n);
      out.add_term(target, shift * poly[j]);
    }
    return;
  }
  if (x.d < 0 && y.d <= 0) {
    out.add_term({m + k, x.d + y.d}, w * q_reduced(ctx, -x.d * k));
    return;
  }
  if (x.d >= 0 && y.d > 0) {
    out.add_term({m + k, x.d + y.d}, w * q_reduced(ctx, m * y.d));
    return;
  }
  if (x.d >= 0 && y.d <= 0 && !(x.d > 0 && y.d < 0)) {
    out.add_term({m + k, x.d + y.d}, w);
    return;
  }
  out += w * multiply_monomials(ctx, x, y);
}

}  // namespace

ReducedExponent reduce_exponent(const ScalarContext& ctx, long n) {
  require_torsion(ctx, "reduce_exponent");
  const long p = ctx.order();
  long r = n % p;
  if (r < 0) r += p;
  return {r};
}

Element pow_product_identity(const ScalarContext& ctx, long l) {
  require_torsion(ctx, "pow_product_identity");
  if (l < ctx.order())
    throw std::invalid_argument("pow_product_identity: needs l >= p (l=" + std::to_string(l) +
                                ", p=" + std::to_string(ctx.order()) + ")");
  const Scalar scale = (Scalar::one(ctx) - Scalar::q_power(ctx, 1)).pow(-l);
  Element out(ctx);
  out.add_term(Monomial::identity(), scale);
  out.add_term(Monomial::c_power(l), l % 2 == 0 ? -scale : scale);
  return out;
}

Element a_pow_b_pow(const ScalarContext& ctx, long l) {
  require_torsion(ctx, "a_pow_b_pow");
  if (l < ctx.order()) throw std::invalid_argument("a_pow_b_pow: needs l >= p");
  return cpoly_element(ctx, power_product(ctx, l, true));
}

Element b_pow_a_pow(const ScalarContext& ctx, long l) {
  require_torsion(ctx, "b_pow_a_pow");
  if (l < ctx.order()) throw std::invalid_argument("b_pow_a_pow: needs l >= p");
  return cpoly_element(ctx, power_product(ctx, l, false));
}

Element multiply_monomials_fastpath(const ScalarContext& ctx, const Monomial& x, const Monomial& y) {
  require_torsion(ctx, "multiply_fastpath");
  Element out(ctx);
  accumulate_fast(ctx, x, y, Scalar::one(ctx), out);
  return out;
}

Element multiply_fastpath(const Element& x, const Element& y) {
  require_same_context(x, y);
  const auto& ctx = x.context();
  require_torsion(ctx, "multiply_fastpath");
  Element out(ctx);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) accumulate_fast(ctx, mx, my, cx * cy, out);
  return out;
}

bool is_central(const Element& x) {
  const auto& ctx = x.context();
  return commutator(x, Element::gen_a(ctx)).is_zero() && commutator(x, Element::gen_b(ctx)).is_zero();
}

}  // namespace qheis
