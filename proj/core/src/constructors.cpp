#include "qheis/constructors.hpp"

#include "qheis/qcombinatorics.hpp"

namespace qheis {

namespace {

Scalar qp(const ScalarContext& ctx, long n) { return Scalar::q_power(ctx, n); }
Scalar one(const ScalarContext& ctx) { return Scalar::one(ctx); }
// 1 - q^n
Scalar one_minus_q(const ScalarContext& ctx, long n) { return one(ctx) - qp(ctx, n); }
// q^n - 1
Scalar q_minus_one(const ScalarContext& ctx, long n) { return qp(ctx, n) - one(ctx); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

void require_not_divisible(const ScalarContext& ctx, long n, const std::string& name) {
  if (divisible_by_order(ctx, n))
    throw ConstructionError("congruence condition failed: " + name + " = " + std::to_string(n) +
                            " is divisible by p = " + std::to_string(ctx.order()));
}

BracketExpr bba() { return BracketExpr::bracket(BracketExpr::b(), BracketExpr::bracket(BracketExpr::b(), BracketExpr::a())); }
BracketExpr baa() { return BracketExpr::bracket(BracketExpr::bracket(BracketExpr::b(), BracketExpr::a()), BracketExpr::a()); }

}  // namespace

BracketExpr base_a_expr(long k, long l) {
  require(k >= 0 && l >= 1, "base_a needs k >= 0, l >= 1");
  const BracketExpr c = BracketExpr::c();
  BracketExpr e = BracketExpr::b();
  for (long i = 0; i <= l; ++i) e = BracketExpr::bracket(e, BracketExpr::a());  // -ad A
  for (long i = 0; i < k; ++i) e = BracketExpr::bracket(e, c);                  // -ad C
  return e;
}

BracketExpr base_b_expr(long k, long l) {
  require(k >= 0 && l >= 1, "base_b needs k >= 0, l >= 1");
  const BracketExpr c = BracketExpr::c();
  BracketExpr e = bba();
  for (long i = 0; i < k; ++i) e = BracketExpr::bracket(c, e);
  for (long i = 0; i + 1 < l; ++i) e = BracketExpr::bracket(BracketExpr::b(), e);
  return e;
}

BracketExpr base_g_expr(long k) {
  require(k >= 0, "base_g needs k >= 0");
  const BracketExpr c = BracketExpr::c();
  BracketExpr e = baa();
  for (long i = 0; i < k; ++i) e = BracketExpr::bracket(e, c);
  return BracketExpr::bracket(BracketExpr::b(), e);
}

Element base_a(const ScalarContext& ctx, long k, long l) { return eval_bracket_expr(base_a_expr(k, l), ctx); }
Element base_b(const ScalarContext& ctx, long k, long l) { return eval_bracket_expr(base_b_expr(k, l), ctx); }
Element base_g(const ScalarContext& ctx, long k) { return eval_bracket_expr(base_g_expr(k), ctx); }

Element base_a_closed(const ScalarContext& ctx, long k, long l) {
  return Element(Monomial::c_a(k + 1, l), -(one_minus_q(ctx, 1).pow(l) * q_minus_one(ctx, l).pow(k)));
}

Element base_b_closed(const ScalarContext& ctx, long k, long l) {
  return Element(Monomial::b_c(l, k + 1), q_minus_one(ctx, 1).pow(k + 1) * one_minus_q(ctx, k + 1).pow(l - 1));
}

Element base_g_closed(const ScalarContext& ctx, long k) {
  const Scalar scale = qp(ctx, -k) * q_minus_one(ctx, 1).pow(k + 1);
  Element out(ctx);
  out.add_term(Monomial::c_power(k + 1), scale * qp(ctx, 1) * q_int(ctx, k));
  out.add_term(Monomial::c_power(k + 2), -(scale * q_int(ctx, k + 1)));
  return out;
}

Element base_g_closed_corrected(const ScalarContext& ctx, long k) {
  const Scalar scale = qp(ctx, -(k + 1)) * q_minus_one(ctx, 1).pow(k + 1);
  Element out(ctx);
  out.add_term(Monomial::c_power(k + 1), scale * q_int(ctx, k + 1));
  out.add_term(Monomial::c_power(k + 2), -(scale * q_int(ctx, k + 2)));
  return out;
}

Element base_g_weighted_sum(const ScalarContext& ctx, long k) {
  Element out(ctx);
  for (long i = 0; i <= k; ++i) out += q_minus_one(ctx, 1).pow(-(i + 1)) * base_g(ctx, i);
  return qp(ctx, k) * out;
}

BracketExpr obase_a_expr(const ScalarContext& ctx, long k, long l) {
  require(k >= 0 && l >= 1, "obase_a needs k >= 0, l >= 1");
  require_not_divisible(ctx, l, "l");
  const Scalar coeff = -(one_minus_q(ctx, 1).pow(-l) * q_minus_one(ctx, l).pow(-k));
  return BracketExpr::scaled(coeff, base_a_expr(k, l));
}

BracketExpr obase_b_expr(const ScalarContext& ctx, long k, long l) {
  require(k >= 0 && l >= 1, "obase_b needs k >= 0, l >= 1");
  require_not_divisible(ctx, k + 1, "k+1");
  const Scalar coeff = q_minus_one(ctx, 1).pow(-k - 1) * one_minus_q(ctx, k + 1).pow(1 - l);
  return BracketExpr::scaled(coeff, base_b_expr(k, l));
}

BracketExpr obase_g_expr(const ScalarContext& ctx, long k) {
  require(k >= 0, "obase_g needs k >= 0");
  require_not_divisible(ctx, k + 1, "k+1");
  const Scalar lead = qp(ctx, k) / one_minus_q(ctx, k + 1);
  std::vector<BracketExpr::Term> terms;
  for (long i = 0; i <= k; ++i) terms.emplace_back(lead * q_minus_one(ctx, 1).pow(-i), base_g_expr(i));
  return BracketExpr::scaled_sum(std::move(terms));
}

Element obase_a(const ScalarContext& ctx, long k, long l) { return eval_bracket_expr(obase_a_expr(ctx, k, l), ctx); }
Element obase_b(const ScalarContext& ctx, long k, long l) { return eval_bracket_expr(obase_b_expr(ctx, k, l), ctx); }
Element obase_g(const ScalarContext& ctx, long k) { return eval_bracket_expr(obase_g_expr(ctx, k), ctx); }

Element wrapped_a(const ScalarContext& ctx, long k, long l) {
  require(divisible_by_order(ctx, l) && l >= 2, "wrapped_a needs l >= 2 divisible by p");
  require_not_divisible(ctx, k + 1, "k+1");
  return eval_bracket_expr(BracketExpr::bracket(obase_a_expr(ctx, k, l - 1), BracketExpr::a()), ctx);
}

Element wrapped_b(const ScalarContext& ctx, long k, long l) {
  require(k >= 1 && divisible_by_order(ctx, k + 1), "wrapped_b needs k >= 1 with k+1 divisible by p");
  require_not_divisible(ctx, l, "l");
  return eval_bracket_expr(BracketExpr::bracket(obase_b_expr(ctx, k - 1, l), BracketExpr::c()), ctx);
}

Construction construct_basis_element(const ScalarContext& ctx, const Monomial& m) {
  const MonomialClass cls = classify_monomial(ctx, m);
  if (!cls.is_lie) throw ConstructionError(m.to_string() + " is not a Lie polynomial: " + cls.reason);

  auto finish = [&](std::string recipe, BracketExpr e) {
    Element value = eval_bracket_expr(e, ctx);
    return Construction{std::move(recipe), std::move(e), std::move(value)};
  };

  if (m == Monomial::gen_a()) return finish("generator", BracketExpr::a());
  if (m == Monomial::gen_b()) return finish("generator", BracketExpr::b());
  if (m == Monomial::c_power(1)) return finish("commutator", BracketExpr::c());

  if (m.d == 0) {
    const long n = m.k;
    if (divisible_by_order(ctx, n))
      throw ConstructionError(m.to_string() +
                              " has no bracket witness: no commutator of basis monomials has a term C^n "
                              "with n divisible by p");
    if (!divisible_by_order(ctx, n - 1)) {
      // C^n = ({1}_q C - sum_{i<n-1} q^(i+1) (q-1)^-(i+1) base_g(i)) / {n}_q
      const Scalar inv_n = q_int(ctx, n).inverse();
      std::vector<BracketExpr::Term> terms;
      terms.emplace_back(inv_n, BracketExpr::c());
      for (long i = 0; i + 2 <= n; ++i)
        terms.emplace_back(-(inv_n * qp(ctx, i + 1) * q_minus_one(ctx, 1).pow(-(i + 1))), base_g_expr(i));
      return finish("c-power-weighted-sum", BracketExpr::scaled_sum(std::move(terms)));
    }
    // n - 1 divisible by p: C^(n-1) is central and [C^(n-2) A, B C] = C^n.
    const long k = n - 2;
    BracketExpr ca = BracketExpr::scaled(q_minus_one(ctx, 1).pow(-k), base_a_expr(k - 1, 1));
    BracketExpr bc = BracketExpr::scaled(q_minus_one(ctx, 1).inverse(), bba());
    return finish("c-power-central-bracket", BracketExpr::bracket(ca, bc));
  }

  if (m.d < 0) {
    const long k = m.k - 1, l = -m.d;  // target C^(k+1) A^l
    if (!divisible_by_order(ctx, l)) {
      const Scalar coeff = -(one_minus_q(ctx, 1).pow(l) * q_minus_one(ctx, l).pow(k)).inverse();
      return finish("ca-ad-chain", BracketExpr::scaled(coeff, base_a_expr(k, l)));
    }
    // l = np: one more ad A on the chain for l - 1.
    const Scalar coeff = one_minus_q(ctx, 1).pow(1 - l) /
                         (one_minus_q(ctx, k + 1) * q_minus_one(ctx, l - 1).pow(k));
    return finish("ca-wrapped-chain",
                  BracketExpr::scaled(coeff, BracketExpr::bracket(BracketExpr::a(), base_a_expr(k, l - 1))));
  }

  const long k = m.k - 1, l = m.d;  // target B^l C^(k+1)
  if (!divisible_by_order(ctx, k + 1)) {
    const Scalar coeff = (q_minus_one(ctx, 1).pow(k + 1) * one_minus_q(ctx, k + 1).pow(l - 1)).inverse();
    return finish("bc-ad-chain", BracketExpr::scaled(coeff, base_b_expr(k, l)));
  }
  // k+1 = np: chain for C^(np-1), then one more -ad C.
  const long np = k + 1;
  const Scalar coeff = (one_minus_q(ctx, l) * q_minus_one(ctx, 1).pow(np - 1) * one_minus_q(ctx, np - 1).pow(l - 1)).inverse();
  return finish("bc-wrapped-chain",
                BracketExpr::scaled(coeff, BracketExpr::bracket(base_b_expr(np - 2, l), BracketExpr::c())));
}

}  // namespace qheis
