#include <doctest.h>

#include "helpers.hpp"
#include "qheis/free_algebra.hpp"
#include "qheis/verify.hpp"

using namespace qheis;
using namespace qheis::testing;

namespace {

FreePoly random_free_poly(const ScalarContext& ctx, std::mt19937_64& rng, std::size_t max_len, int max_terms) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 1), nterms(1, max_terms), coeff(-3, 3), qe(0, 2);
  FreePoly out(ctx);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::string w;
    const std::size_t l = len(rng);
    for (std::size_t j = 0; j < l; ++j) w += letter(rng) ? 'B' : 'A';
    int c = 0;
    while (c == 0) c = coeff(rng);
    out.add(FreeWord(w), num(ctx, c) * qp(ctx, qe(rng)));
  }
  return out;
}

Element to_el(const FreePoly& w) { return to_element(reduce_word(w), w.context()); }

}  // namespace

TEST_CASE("multiplication agrees with word rewriting on words") {
  std::mt19937_64 rng(2024);
  for (const auto* ctx : property_contexts())
    for (int i = 0; i < 25; ++i) {
      const FreePoly w1 = random_free_poly(*ctx, rng, 6, 3), w2 = random_free_poly(*ctx, rng, 6, 3);
      CHECK(multiply(to_el(w1), to_el(w2)) == to_el(w1 * w2));
    }
}

TEST_CASE("multiplication agrees with word rewriting on random elements") {
  for (const auto* ctx : property_contexts())
    CHECK(verify_oracle_equivalence(*ctx, 25, 4, 3, 99).passed());
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(17);
  for (const auto* ctx : property_contexts())
    for (int i = 0; i < 12; ++i) {
      const Element x = random_element(*ctx, rng, 3, 3), y = random_element(*ctx, rng, 3, 3),
                    z = random_element(*ctx, rng, 3, 3);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("commutator is bilinear, antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(23);
  for (const auto* ctx : property_contexts())
    for (int i = 0; i < 10; ++i) {
      const Element x = random_element(*ctx, rng, 3, 3), y = random_element(*ctx, rng, 3, 3),
                    z = random_element(*ctx, rng, 3, 3);
      const Scalar s = num(*ctx, 3, 2) * qp(*ctx, 1);
      CHECK(commutator(x, y) == -commutator(y, x));
      CHECK(commutator(x + s * y, z) == commutator(x, z) + s * commutator(y, z));
      CHECK(commutator(x, y + z) == commutator(x, y) + commutator(x, z));
      const Element jacobi =
          commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
      CHECK(jacobi.is_zero());
    }
}

TEST_CASE("products of homogeneous elements add grades") {
  std::mt19937_64 rng(31);
  for (const auto* ctx : property_contexts())
    for (int i = 0; i < 20; ++i) {
      const Element x = random_element(*ctx, rng, 4, 4), y = random_element(*ctx, rng, 4, 4);
      for (const auto& [gx, cx] : graded_components(x))
        for (const auto& [gy, cy] : graded_components(y)) CHECK(is_homogeneous(multiply(cx, cy), gx + gy));
    }
  for (int p : {2, 3}) CHECK(verify_gradation(tor(p), {2 * p, 2 * p}).passed());
}

TEST_CASE("word rewriting is confluent") {
  for (const auto* ctx : {&gen(), &tor(2), &tor(3)}) {
    // Every word of length <= 8 under all three strategies.
    for (int len = 0; len <= 8; ++len)
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::string w;
        for (int j = 0; j < len; ++j) w += (bits >> j) & 1 ? 'B' : 'A';
        const FreePoly fp(*ctx, w);
        const BANormalForm left = reduce_word(fp);
        CHECK(reduce_word_explicit(fp, RewriteStrategy::Rightmost) == left);
        CHECK(reduce_word_explicit(fp, RewriteStrategy::Random, static_cast<std::uint64_t>(bits) * 31 + len) == left);
      }
  }
}

TEST_CASE("structure-constant and word paths agree on all small monomial pairs") {
  for (const auto* ctx : {&gen(), &tor(2), &tor(3), &tor(4)})
    for (long k1 = 0; k1 <= 2; ++k1)
      for (long d1 = -3; d1 <= 3; ++d1)
        for (long k2 = 0; k2 <= 2; ++k2)
          for (long d2 = -3; d2 <= 3; ++d2) {
            const Element x = mono(*ctx, k1, d1), y = mono(*ctx, k2, d2);
            CHECK(multiply(x, y) == multiply_by_rewriting(x, y));
          }
}
