#include "qheis/classify.hpp"

#include <stdexcept>

namespace qheis {

namespace {
void require_torsion(const ScalarContext& ctx) {
  if (!ctx.is_torsion()) throw std::invalid_argument("Lie polynomial classification requires a torsion context");
}
}  // namespace

std::string to_string(LieBasisConvention c) {
  switch (c) {
    case LieBasisConvention::Constructive:
      return "constructive";
    case LieBasisConvention::ExcludeShiftedCPowers:
      return "exclude-shifted-c-powers";
    case LieBasisConvention::ExcludeCentralCPowers:
      return "exclude-central-c-powers";
  }
  return "unknown";
}

bool divisible_by_order(const ScalarContext& ctx, long n) {
  return ctx.is_torsion() ? n % ctx.order() == 0 : n == 0;
}

bool in_n_subspace(const ScalarContext& ctx, const Monomial& m) {
  const long l = m.d < 0 ? -m.d : m.d;
  return m.k >= 1 && l >= 1 && divisible_by_order(ctx, m.k) && divisible_by_order(ctx, l);
}

MonomialClass classify_monomial(const ScalarContext& ctx, const Monomial& m,
                                LieBasisConvention convention) {
  require_torsion(ctx);
  const long p = ctx.order();
  const long l = m.d < 0 ? -m.d : m.d;
  const char* letter = m.d < 0 ? "A" : "B";
  if (m.d == 0) {
    if (m.k == 0) return {false, false, "I is not a Lie polynomial"};
    if (convention == LieBasisConvention::ExcludeShiftedCPowers && m.k >= 2 && (m.k - 1) % p == 0)
      return {false, false, "C^n with n-1 divisible by p is excluded by the literal spanning set"};
    if (convention == LieBasisConvention::ExcludeCentralCPowers && m.k % p == 0)
      return {false, false, "C^n with n divisible by p never occurs in a commutator"};
    return {true, false, "positive powers of C are Lie polynomials"};
  }
  if (m.k == 0) {
    if (l == 1) return {true, false, std::string("generator ") + letter};
    return {false, false, std::string("pure powers ") + letter + "^l with l >= 2 are not Lie polynomials"};
  }
  if (m.k % p == 0 && l % p == 0)
    return {false, true, "both exponents divisible by p: basis element of N"};
  return {true, false, "not both exponents divisible by p"};
}

Membership is_lie_polynomial(const Element& x, LieBasisConvention convention) {
  require_torsion(x.context());
  Element residual(x.context());
  for (const auto& [m, c] : x.terms())
    if (!classify_monomial(x.context(), m, convention).is_lie) residual.add_term(m, c);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

Element project_n(const Element& x) {
  require_torsion(x.context());
  Element out(x.context());
  for (const auto& [m, c] : x.terms())
    if (in_n_subspace(x.context(), m)) out.add_term(m, c);
  return out;
}

}  // namespace qheis
