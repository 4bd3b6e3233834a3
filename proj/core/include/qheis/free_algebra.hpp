#pragma once

// Words in the free algebra on {A, B} and their reduction by the single
// rewrite rule  AB -> q BA + I.
//
// This path never touches the structure constants, so it serves as an
// independent oracle for multiply(). Normal forms are combinations of
// B^a A^b, converted to the C-basis by ba_to_cbasis().

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qheis/element.hpp"

namespace qheis {

// A word over {A, B}; the empty word is I.
struct FreeWord {
  std::string letters;

  FreeWord() = default;
  explicit FreeWord(std::string s);  // validates the alphabet

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend FreeWord operator+(const FreeWord& a, const FreeWord& b) {
    FreeWord w;
    w.letters = a.letters + b.letters;
    return w;
  }
  std::size_t size() const { return letters.size(); }
};

class FreePoly {
 public:
  explicit FreePoly(const ScalarContext& ctx) : ctx_(&ctx) {}
  FreePoly(const ScalarContext& ctx, const FreeWord& w) : ctx_(&ctx) { add(w, Scalar::one(ctx)); }
  FreePoly(const ScalarContext& ctx, const std::string& word) : FreePoly(ctx, FreeWord(word)) {}

  const ScalarContext& context() const { return *ctx_; }
  const std::map<FreeWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, const Scalar& c);
  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Scalar& s);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(const Scalar& s, FreePoly a) { return a *= s; }

  // Concatenation product.
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);

 private:
  const ScalarContext* ctx_;
  std::map<FreeWord, Scalar> terms_;
};

// Normal form: coefficients on B^a A^b keyed by (a, b).
using BANormalForm = std::map<std::pair<long, long>, Scalar>;

enum class RewriteStrategy {
  Leftmost,   // always rewrite the leftmost AB
  Rightmost,  // always rewrite the rightmost AB
  Random,     // rewrite a uniformly chosen AB occurrence
};

// Reduces to normal form with the leftmost strategy. Words are consumed left
// to right; appending B to B^a A^b rewrites the boundary AB repeatedly, which
// is exactly leftmost rewriting with common prefixes shared.
BANormalForm reduce_word(const FreePoly& w);

// reduce_word(left * right) without materializing the concatenation.
BANormalForm reduce_word_product(const FreePoly& left, const FreePoly& right);

// Reduction with an explicit word store and a selectable redex order. Slow;
// meant for confluence checks on short words.
BANormalForm reduce_word_explicit(const FreePoly& w, RewriteStrategy strategy,
                                  std::uint64_t seed = 0);

// B^a A^b in the C-basis.
Element ba_to_cbasis(long a, long b, const ScalarContext& ctx);

// ba_to_cbasis applied termwise.
Element to_element(const BANormalForm& nf, const ScalarContext& ctx);

// Expansion of a basis monomial as words, with C -> AB - BA.
FreePoly cbasis_to_free(const Monomial& m, const ScalarContext& ctx);
FreePoly cbasis_to_free(const Element& x);

// x * y through words: cbasis_to_free, rewrite, ba_to_cbasis.
Element multiply_by_rewriting(const Element& x, const Element& y);

}  // namespace qheis
