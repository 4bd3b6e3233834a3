#include <doctest.h>

#include "helpers.hpp"
#include "qheis/free_algebra.hpp"
#include "qheis/torsion.hpp"

using namespace qheis;
using namespace qheis::testing;

namespace {

// A^l B^l through word rewriting.
Element ab_words(const ScalarContext& ctx, long l) {
  return to_element(reduce_word(FreePoly(ctx, std::string(l, 'A') + std::string(l, 'B'))), ctx);
}
Element ba_words(const ScalarContext& ctx, long l) {
  return to_element(reduce_word(FreePoly(ctx, std::string(l, 'B') + std::string(l, 'A'))), ctx);
}

// (I - C^p) / (1 - q)^p
Element central_factor(const ScalarContext& ctx) {
  const long p = ctx.order();
  return (one(ctx) - qp(ctx, 1)).pow(-p) * (ident(ctx) - mono(ctx, p, 0));
}

}  // namespace

TEST_CASE("reduced exponents") {
  CHECK(reduce_exponent(tor(3), 7).value == 1);
  CHECK(reduce_exponent(tor(2), -1).value == 1);
  CHECK(reduce_exponent(tor(5), 10).value == 0);
  CHECK(reduce_exponent(tor(5), -12).value == 3);
  CHECK_THROWS_AS(reduce_exponent(gen(), 3), std::invalid_argument);
  for (int p = 2; p <= 7; ++p)
    for (long n = -20; n <= 20; ++n) {
      const long r = reduce_exponent(tor(p), n).value;
      CHECK(r >= 0);
      CHECK(r < p);
      CHECK(qp(tor(p), n) == qp(tor(p), r));
    }
}

TEST_CASE("A^p B^p = B^p A^p = (I - C^p) / (1 - q)^p") {
  for (int p = 2; p <= 7; ++p) {
    const auto& t = tor(p);
    const Element u = central_factor(t);
    CHECK(ab_words(t, p) == u);
    CHECK(ba_words(t, p) == u);
    CHECK(a_pow_b_pow(t, p) == u);
    CHECK(b_pow_a_pow(t, p) == u);
  }
  // p = 3: (I - C^3)/(1-q)^3, so the sign of the C^3 term is negative.
  const auto& t3 = tor(3);
  const Element a3b3 = ab_words(t3, 3);
  CHECK(a3b3.coefficient(Monomial{3, 0}) == -(one(t3) - qp(t3, 1)).pow(-3));
  CHECK(a3b3.coefficient(Monomial{0, 0}) == (one(t3) - qp(t3, 1)).pow(-3));
}

TEST_CASE("products A^l B^l for l >= p") {
  for (int p : {2, 3, 5})
    for (long l = p; l <= 2 * p + 1; ++l) {
      const auto& t = tor(p);
      CHECK(a_pow_b_pow(t, l) == ab_words(t, l));
      CHECK(b_pow_a_pow(t, l) == ba_words(t, l));
    }
  // p = 2, l = 3: A^3 B^3 = (I + C - C^2 - C^3) / 8.
  const auto& t = tor(2);
  const Element expected = num(t, 1, 8) * (ident(t) + mono(t, 1, 0) - mono(t, 2, 0) - mono(t, 3, 0));
  CHECK(ab_words(t, 3) == expected);
  CHECK(a_pow_b_pow(t, 3) == expected);
  CHECK_THROWS_AS(a_pow_b_pow(t, 1), std::invalid_argument);
}

TEST_CASE("two-term closed form for A^l B^l") {
  // Evaluates (I - (-1)^l C^l) / (1 - q)^l.
  const auto& t2 = tor(2);
  CHECK(pow_product_identity(t2, 2) == num(t2, 1, 4) * (ident(t2) - mono(t2, 2, 0)));
  CHECK(pow_product_identity(t2, 2) == ab_words(t2, 2));
  const auto& t3 = tor(3);
  CHECK(pow_product_identity(t3, 3) == (one(t3) - qp(t3, 1)).pow(-3) * (ident(t3) + mono(t3, 3, 0)));
  // It does not match the products in general.
  CHECK(pow_product_identity(t3, 3) != ab_words(t3, 3));
  CHECK(pow_product_identity(t2, 3) != ab_words(t2, 3));
  CHECK_THROWS_AS(pow_product_identity(t3, 2), std::invalid_argument);
}

TEST_CASE("fast multiplication") {
  const auto& t3 = tor(3);
  for (long m = 0; m <= 2; ++m)
    CHECK(multiply_fastpath(mono(t3, m, -4), mono(t3, 2, 0)) == term(qp(t3, 2), m + 2, -4));
  CHECK(multiply_fastpath(mono(t3, 0, -3), mono(t3, 0, 3)) == central_factor(t3));
  for (long k1 = 0; k1 <= 2; ++k1)
    for (long d1 = -2; d1 <= 2; ++d1)
      for (long k2 = 0; k2 <= 2; ++k2)
        for (long d2 = -2; d2 <= 2; ++d2)
          CHECK(multiply_fastpath(mono(t3, k1, d1), mono(t3, k2, d2)) == multiply(mono(t3, k1, d1), mono(t3, k2, d2)));

  // p = 5 runs on the larger grid of the acceptance suite.
  for (int p : {2, 3}) {
    const auto& t = tor(p);
    long mismatches = 0;
    for (long k1 = 0; k1 <= 2 * p; ++k1)
      for (long d1 = -(2 * p + 1); d1 <= 2 * p + 1; ++d1)
        for (long k2 = 0; k2 <= 2 * p; ++k2)
          for (long d2 = -(2 * p + 1); d2 <= 2 * p + 1; ++d2)
            if (multiply_monomials_fastpath(t, {k1, d1}, {k2, d2}) != multiply_monomials(t, {k1, d1}, {k2, d2}))
              ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("centrality") {
  const auto& t3 = tor(3);
  CHECK(is_central(mono(t3, 0, -3)));
  CHECK(is_central(mono(t3, 3, 0)));
  CHECK_FALSE(is_central(B(t3)));
  CHECK_FALSE(is_central(mono(t3, 2, 0)));
  for (int p = 2; p <= 7; ++p)
    for (long n = 1; n <= 2; ++n) {
      const auto& t = tor(p);
      CHECK(is_central(mono(t, 0, -n * p)));
      CHECK(is_central(mono(t, 0, n * p)));
      CHECK(is_central(mono(t, n * p, 0)));
    }
}
