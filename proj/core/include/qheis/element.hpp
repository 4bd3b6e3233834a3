#pragma once

// Basis monomials and sparse elements of H(q).
//
// With C = [A,B] = AB - BA, the algebra has the basis
//   C^k,  C^k A^l,  B^l C^k      (k >= 0, l >= 1).
// A monomial is encoded as (k, d): d = 0 is C^k, d < 0 is C^k A^(-d) and
// d > 0 is B^d C^k. The Z-grade of (k, d) is d.

#include <compare>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "qheis/scalar.hpp"

namespace qheis {

struct Monomial {
  long k = 0;  // exponent of C
  long d = 0;  // signed A/B exponent

  static constexpr Monomial identity() { return {0, 0}; }
  static constexpr Monomial c_power(long k) { return {k, 0}; }
  // C^k A^l
  static constexpr Monomial c_a(long k, long l) { return {k, -l}; }
  // B^l C^k
  static constexpr Monomial b_c(long l, long k) { return {k, l}; }
  static constexpr Monomial gen_a() { return {0, -1}; }
  static constexpr Monomial gen_b() { return {0, 1}; }

  constexpr long grade() const { return d; }
  constexpr long a_exp() const { return d < 0 ? -d : 0; }
  constexpr long b_exp() const { return d > 0 ? d : 0; }
  constexpr bool is_identity() const { return k == 0 && d == 0; }

  // Canonical order: grade first, then C-exponent.
  friend constexpr auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.k <=> b.k;
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  // "I", "C^k", "C^k*A^l", "B^l*C^k" with unit exponents and C^0 omitted.
  std::string to_string() const;
};

inline long grade(const Monomial& m) { return m.grade(); }

class Element {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit Element(const ScalarContext& ctx) : ctx_(&ctx) {}
  Element(const ScalarContext& ctx, const Monomial& m) : ctx_(&ctx) { terms_.emplace(m, Scalar::one(ctx)); }
  Element(const Monomial& m, const Scalar& coeff) : ctx_(&coeff.context()) { add_term(m, coeff); }

  static Element scalar(const Scalar& s) { return Element(Monomial::identity(), s); }
  static Element gen_a(const ScalarContext& ctx) { return Element(ctx, Monomial::gen_a()); }
  static Element gen_b(const ScalarContext& ctx) { return Element(ctx, Monomial::gen_b()); }
  // C = [A,B]
  static Element gen_c(const ScalarContext& ctx) { return Element(ctx, Monomial::c_power(1)); }

  const ScalarContext& context() const { return *ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  // Adds coeff * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Single monomial with coefficient exactly one.
  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_one(); }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Element from_json(const nlohmann::json& j);

 private:
  const ScalarContext* ctx_;
  TermMap terms_;
};

void require_same_context(const Element& x, const Element& y);

// Partition of the terms by Z-grade.
std::map<long, Element> graded_components(const Element& x);

// True if every term has grade g.
bool is_homogeneous(const Element& x, long g);

}  // namespace qheis
