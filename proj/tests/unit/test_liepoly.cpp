#include <doctest.h>

#include "helpers.hpp"
#include "qheis/bracket_expr.hpp"
#include "qheis/classify.hpp"
#include "qheis/closure.hpp"
#include "qheis/constructors.hpp"
#include "qheis/qcombinatorics.hpp"
#include "qheis/verify.hpp"

using namespace qheis;
using namespace qheis::testing;

TEST_CASE("monomial classification") {
  const auto& t3 = tor(3);
  CHECK_FALSE(classify_monomial(t3, {0, 0}).is_lie);
  CHECK(classify_monomial(t3, {2, 0}).is_lie);
  const auto n = classify_monomial(t3, {3, -3});
  CHECK_FALSE(n.is_lie);
  CHECK(n.in_n);
  CHECK(classify_monomial(t3, {1, -3}).is_lie);
  CHECK(classify_monomial(t3, {0, -1}).is_lie);
  CHECK(classify_monomial(t3, {0, 1}).is_lie);
  const auto a2 = classify_monomial(t3, {0, -2});
  CHECK_FALSE(a2.is_lie);
  CHECK_FALSE(a2.in_n);
  CHECK(classify_monomial(t3, {3, 2}).is_lie);
  CHECK_FALSE(classify_monomial(t3, {6, 3}).is_lie);
  CHECK_THROWS_AS(classify_monomial(gen(), {1, 0}), std::invalid_argument);

  for (int p : {2, 3, 5})
    for (long k = 0; k <= 3 * p; ++k)
      for (long d = -3 * p; d <= 3 * p; ++d) {
        const Monomial m{k, d};
        const auto c = classify_monomial(tor(p), m);
        if (c.in_n) CHECK_FALSE(c.is_lie);
        CHECK(c.in_n == in_n_subspace(tor(p), m));
      }
}

TEST_CASE("classification conventions for C-powers") {
  const auto& t2 = tor(2);
  using LC = LieBasisConvention;
  for (long n = 1; n <= 8; ++n) {
    CHECK(classify_monomial(t2, {n, 0}, LC::Constructive).is_lie);
    CHECK(classify_monomial(t2, {n, 0}, LC::ExcludeShiftedCPowers).is_lie == (n == 1 || (n - 1) % 2 != 0));
    CHECK(classify_monomial(t2, {n, 0}, LC::ExcludeCentralCPowers).is_lie == (n % 2 != 0));
  }
  CHECK(to_string(LC::Constructive) == "constructive");
  CHECK(to_string(LC::ExcludeShiftedCPowers) == "exclude-shifted-c-powers");
  CHECK(to_string(LC::ExcludeCentralCPowers) == "exclude-central-c-powers");
}

TEST_CASE("membership") {
  for (int p : {2, 3, 5}) {
    const auto& t = tor(p);
    auto m1 = is_lie_polynomial(A(t) + B(t));
    CHECK(m1.is_lie);
    CHECK(m1.residual.is_zero());
    auto m2 = is_lie_polynomial(ident(t));
    CHECK_FALSE(m2.is_lie);
    CHECK(m2.residual == ident(t));
    auto m3 = is_lie_polynomial(mono(t, p, -p) + mono(t, 1, -1));
    CHECK_FALSE(m3.is_lie);
    CHECK(m3.residual == mono(t, p, -p));
  }
}

TEST_CASE("projection onto N") {
  for (int p : {2, 3}) {
    const auto& t = tor(p);
    CHECK(project_n(mono(t, p, -p)) == mono(t, p, -p));
    CHECK(project_n(mono(t, 1, -1)).is_zero());
    for (long m = 0; m <= 2 * p; ++m)
      for (long k = 0; k <= 2 * p; ++k)
        for (long n = 1; n <= 2 * p; ++n)
          for (long l = 1; l <= 2 * p; ++l)
            if (n != l) CHECK(project_n(commutator(mono(t, m, -n), mono(t, k, l))).is_zero());
  }
}

TEST_CASE("bracket constructors and their closed forms") {
  for (const auto* ctx : {&gen(), &tor(2), &tor(3), &tor(5)}) {
    const auto& c = *ctx;
    CHECK(base_a(c, 0, 1) == term(qm1(c), 1, -1));
    CHECK(base_b(c, 0, 1) == term(qm1(c), 1, 1));
    for (long k = 0; k <= 4; ++k)
      for (long l = 1; l <= 4; ++l) {
        CHECK(base_a(c, k, l) == base_a_closed(c, k, l));
        CHECK(base_b(c, k, l) == base_b_closed(c, k, l));
      }
  }
  // [B, [[B,A],A]] evaluated directly: (q-1)/q C + (1-q^2)/q C^2.
  for (const auto* ctx : {&gen(), &tor(3), &tor(5)}) {
    const auto& c = *ctx;
    const Element g0 = term(qm1(c) / qp(c, 1), 1, 0) + term((one(c) - qp(c, 2)) / qp(c, 1), 2, 0);
    const Element direct = commutator(B(c), commutator(commutator(B(c), A(c)), A(c)));
    CHECK(base_g(c, 0) == direct);
    CHECK(base_g(c, 0) == g0);
    CHECK(base_g(c, 0) != term(one(c) - qp(c, 1), 2, 0));
    for (long k = 0; k <= 5; ++k) {
      CHECK(base_g(c, k) == base_g_closed_corrected(c, k));
      CHECK(base_g(c, k) != base_g_closed(c, k));
    }
  }
}

TEST_CASE("normalized constructors") {
  const auto& t3 = tor(3);
  CHECK(obase_a(t3, 1, 1) == mono(t3, 2, -1));
  const auto& t2 = tor(2);
  CHECK(obase_b(t2, 0, 2) == mono(t2, 1, 2));
  CHECK_THROWS_AS(obase_a(t3, 0, 3), ConstructionError);
  CHECK_THROWS_AS(obase_b(t3, 2, 1), ConstructionError);
  CHECK_THROWS_AS(obase_g(t3, 2), ConstructionError);

  // The C-power normalization evaluates to -C/q + (1+q)/q C^2 at k = 0, not C^2.
  for (const auto* ctx : {&gen(), &tor(3), &tor(5)}) {
    const auto& c = *ctx;
    const Element expected = term(-qp(c, -1), 1, 0) + term((one(c) + qp(c, 1)) / qp(c, 1), 2, 0);
    CHECK(obase_g(c, 0) == expected);
  }

  for (int p : {2, 3, 5}) {
    const auto& t = tor(p);
    for (long k = 0; k <= 2 * p + 1; ++k)
      for (long l = 1; l <= 2 * p + 1; ++l) {
        if (l % p != 0) CHECK(obase_a(t, k, l) == mono(t, k + 1, -l));
        if ((k + 1) % p != 0) CHECK(obase_b(t, k, l) == mono(t, k + 1, l));
        if (l % p == 0 && (k + 1) % p != 0)
          CHECK(wrapped_a(t, k, l) == term(one(t) - qp(t, k + 1), k + 1, -l));
        if (k >= 1 && (k + 1) % p == 0 && l % p != 0)
          CHECK(wrapped_b(t, k, l) == term(one(t) - qp(t, l), k + 1, l));
      }
  }
}

TEST_CASE("construction of Lie basis monomials") {
  // C^2 for p >= 3 and C^3 at p = 2.
  for (int p : {3, 5}) {
    const auto c2 = construct_basis_element(tor(p), {2, 0});
    CHECK(c2.value == mono(tor(p), 2, 0));
  }
  const auto c3 = construct_basis_element(tor(2), {3, 0});
  CHECK(c3.recipe == "c-power-central-bracket");
  CHECK(c3.value == mono(tor(2), 3, 0));
  // [CA, BC] = C^3 at p = 2.
  CHECK(commutator(mono(tor(2), 1, -1), mono(tor(2), 1, 1)) == mono(tor(2), 3, 0));

  const auto ca3 = construct_basis_element(tor(3), {1, -3});
  CHECK(ca3.recipe == "ca-wrapped-chain");
  CHECK(ca3.value == mono(tor(3), 1, -3));

  for (int p : {2, 3, 5}) {
    const auto bc = construct_basis_element(tor(p), {1, 1});
    CHECK(bc.value == mono(tor(p), 1, 1));
  }

  CHECK(construct_basis_element(tor(3), {0, -1}).expr.depth() == 0);
  CHECK(construct_basis_element(tor(3), {1, 0}).expr.depth() == 1);

  // Non-Lie monomials and central C-powers are rejected.
  CHECK_THROWS_AS(construct_basis_element(tor(3), {3, -3}), ConstructionError);
  CHECK_THROWS_AS(construct_basis_element(tor(3), {0, 0}), ConstructionError);
  CHECK_THROWS_AS(construct_basis_element(tor(2), {2, 0}), ConstructionError);
  CHECK_THROWS_AS(construct_basis_element(tor(3), {6, 0}), ConstructionError);

  // Every constructible monomial of the window evaluates exactly.
  for (int p : {2, 3, 5})
    for (long k = 0; k <= 2 * p + 1; ++k)
      for (long d = -(2 * p + 1); d <= 2 * p + 1; ++d) {
        const Monomial m{k, d};
        if (!classify_monomial(tor(p), m, LieBasisConvention::ExcludeCentralCPowers).is_lie) continue;
        CHECK(construct_basis_element(tor(p), m).value == Element(tor(p), m));
      }
}

TEST_CASE("bracket expression evaluation") {
  const auto& t = tor(3);
  CHECK(eval_bracket_expr(BracketExpr::a(), t) == A(t));
  CHECK(eval_bracket_expr(BracketExpr::c(), t) == C(t));
  const BracketExpr aab = BracketExpr::bracket(BracketExpr::a(), BracketExpr::bracket(BracketExpr::a(), BracketExpr::b()));
  CHECK(eval_bracket_expr(aab, t) == term(qm1(t), 1, -1));
  CHECK(eval_bracket_expr(BracketExpr::scaled(qm1(t).inverse(), aab), t) == mono(t, 1, -1));
  CHECK(aab.to_string() == "[A, [A, B]]");
  CHECK(aab.depth() == 2);
  // [[B,A],A] = (q-1) C A.
  const BracketExpr baa = BracketExpr::bracket(BracketExpr::bracket(BracketExpr::b(), BracketExpr::a()), BracketExpr::a());
  CHECK(eval_bracket_expr(baa, t) == term(qm1(t), 1, -1));
}

TEST_CASE("bracket closure") {
  const auto& t = tor(3);
  const auto r2 = lie_closure(t, 2, Window{2, 2, 0});
  CHECK(r2.basis.dimension() == 3);
  for (const auto& m : {Monomial{0, -1}, Monomial{0, 1}, Monomial{1, 0}}) CHECK(r2.basis.contains_monomial(m));

  const auto r3 = lie_closure(t, 3, Window{2, 2, 0});
  CHECK(r3.basis.dimension() == 5);
  for (const auto& m : {Monomial{1, -1}, Monomial{1, 1}}) CHECK(r3.basis.contains_monomial(m));

  // p = 2, depth 6: C and C^3 are reached, C^2 is not.
  const auto r6 = lie_closure(tor(2), 6, Window{3, 0, 0});
  CHECK(r6.basis.contains_monomial({1, 0}));
  CHECK(r6.basis.contains_monomial({3, 0}));
  CHECK_FALSE(r6.basis.contains_monomial({2, 0}));

  // Deterministic across thread counts.
  const auto single = lie_closure(t, 5, Window{3, 3, 0}, ClosureOptions{1});
  const auto multi = lie_closure(t, 5, Window{3, 3, 0}, ClosureOptions{4});
  CHECK(single.basis.to_json().dump() == multi.basis.to_json().dump());

  // Empty window.
  CHECK(lie_closure(t, 3, Window{0, 0, 0}).basis.dimension() == 0);
}

TEST_CASE("closure elements are Lie polynomials") {
  for (int p : {2, 3}) {
    const auto r = lie_closure(tor(p), 6, Window{4, 4, 0});
    for (const auto& e : r.generated()) CHECK(is_lie_polynomial(e).is_lie);
  }
}

TEST_CASE("row echelon") {
  const auto& t = tor(3);
  RowEchelon ech(t);
  CHECK(ech.insert(mono(t, 1, 0) + mono(t, 2, 0)));
  CHECK(ech.insert(mono(t, 2, 0)));
  CHECK_FALSE(ech.insert(mono(t, 1, 0)));
  CHECK(ech.dimension() == 2);
  CHECK(ech.contains(term(qp(t, 1), 1, 0) - mono(t, 2, 0)));
  CHECK_FALSE(ech.contains(A(t)));
  for (const auto& row : ech.rows()) CHECK(row.terms().begin()->second.is_one());
}

TEST_CASE("verification reports on small grids") {
  const auto& t = tor(3);
  CHECK(verify_no_n_leakage(t, {8, 8}).passed());
  CHECK(verify_no_n_leakage(tor(2), {6, 6}).passed());
  CHECK(verify_derived_algebra(t, {7, 7}).passed());
  CHECK(verify_equal_exponent_commutators(t, 4, 4).passed());
  // [B, C^(k+1) A^l] lands on C^(k+2) A^(l-1) and C^(k+1) A^(l-1).
  for (long k = 0; k <= 3; ++k)
    for (long l = 2; l <= 4; ++l) {
      const Element c = commutator(B(t), mono(t, k + 1, -l));
      for (const auto& [m, coeff] : c.terms()) {
        CHECK(m.d == -(l - 1));
        CHECK((m.k == k + 1 || m.k == k + 2));
      }
    }
  const Report r = verify_gradation(t, {3, 3});
  CHECK(r.passed());
  const auto j = r.to_json();
  for (const char* key : {"claim", "parameters", "pairs_checked", "violations", "elapsed", "passed"})
    CHECK(j.contains(key));
}
