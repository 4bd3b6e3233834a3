#pragma once

#include <random>

#include "qheis/algebra.hpp"
#include "qheis/element.hpp"
#include "qheis/scalar.hpp"

namespace qheis::testing {

inline const ScalarContext& gen() { return ScalarContext::generic(); }
inline const ScalarContext& tor(int p) { return ScalarContext::torsion(p); }

inline Scalar num(const ScalarContext& ctx, long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return Scalar(ctx, r);
}
inline Scalar qp(const ScalarContext& ctx, long n) { return Scalar::q_power(ctx, n); }
inline Scalar one(const ScalarContext& ctx) { return Scalar::one(ctx); }
// q - 1
inline Scalar qm1(const ScalarContext& ctx) { return qp(ctx, 1) - one(ctx); }

inline Element mono(const ScalarContext& ctx, long k, long d) { return Element(ctx, Monomial{k, d}); }
inline Element term(const Scalar& c, long k, long d) { return Element(Monomial{k, d}, c); }
inline Element ident(const ScalarContext& ctx) { return mono(ctx, 0, 0); }
inline Element A(const ScalarContext& ctx) { return Element::gen_a(ctx); }
inline Element B(const ScalarContext& ctx) { return Element::gen_b(ctx); }
inline Element C(const ScalarContext& ctx) { return Element::gen_c(ctx); }

// Contexts exercised by randomized properties.
inline std::vector<const ScalarContext*> property_contexts() {
  return {&gen(), &tor(2), &tor(3), &tor(4), &tor(5), &tor(6)};
}

}  // namespace qheis::testing
