#pragma once

// Exhaustive checks of the structural claims about H(q) at root-of-unity q,
// over bounded grids of basis monomials. Each returns a report; a violation
// is data, not an error.

#include <cstdint>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "qheis/classify.hpp"
#include "qheis/subspace.hpp"

namespace qheis {

struct Report {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  long pairs_checked = 0;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json notes = nlohmann::json::object();
  double elapsed = 0.0;  // seconds

  bool passed() const { return violations.empty(); }
  void add_violation(nlohmann::json v);
  nlohmann::json to_json() const;
};

// Grid of basis monomials with k <= kmax and |d| <= dmax.
struct Bounds {
  long kmax = 0;
  long dmax = 0;
};

// Random element with 1..max_terms terms on monomials with k, |d| <= max_exp
// and small coefficients of the form (c / e) q^j.
Element random_element(const ScalarContext& ctx, std::mt19937_64& rng, long max_exp, int max_terms);

// Structure-constant multiply against the word-rewriting path on random pairs.
Report verify_oracle_equivalence(const ScalarContext& ctx, int pairs, long max_exp, int max_terms,
                                 std::uint64_t seed);

// No commutator of two basis monomials has a term in N.
Report verify_no_n_leakage(const ScalarContext& ctx, const Bounds& bounds);

// Commutators of two Lie basis monomials lie in the derived algebra: they
// are supported on Lie basis monomials other than A and B.
Report verify_derived_algebra(const ScalarContext& ctx, const Bounds& bounds,
                              LieBasisConvention convention = LieBasisConvention::Constructive);

// [C^m A^n, B^s C^r] with m, r >= 1: equal-exponent case is a polynomial in
// C with exponents >= 2; all cases have C-exponent >= 2 on every term and
// are supported on Lie basis monomials.
Report verify_equal_exponent_commutators(const ScalarContext& ctx, long mr_max, long ns_max);

// Every element of the depth-limited closure has no non-Lie component, and
// every Lie monomial of the window is produced exactly by its construction.
Report verify_closure(const ScalarContext& ctx, int depth, const Window& window,
                      LieBasisConvention convention = LieBasisConvention::Constructive);

// Fast multiplication equals structure-constant multiplication on the grid,
// and the central-factor forms of A^l B^l, B^l A^l agree with the general
// path for p <= l <= lmax.
Report verify_torsion_paths(const ScalarContext& ctx, const Bounds& bounds, long lmax);

// The two-term closed form against the general path for p <= l <= lmax.
Report verify_pow_product_identity(const ScalarContext& ctx, long lmax);

// Products of homogeneous monomials land in the summed grade.
Report verify_gradation(const ScalarContext& ctx, const Bounds& bounds);

// Closed forms, normalized constructors, the special wrapped brackets and
// the concise per-monomial recipes, for 0 <= k <= kmax and 1 <= l <= lmax
// under their congruence conditions. notes["identities"] holds per-identity
// counts; the evaluated form of base_g is recorded there too but never
// counted as a violation.
Report verify_constructor_identities(const ScalarContext& ctx, long kmax, long lmax);

// {n}_q = 0 iff p | n for 1 <= n <= nmax; (l choose i)_q != 0 for l < p;
// (l choose i)_q = 0 for l >= p, 0 < i < l and = 1 for i in {0, l}, over
// l <= nmax; symmetry (n choose k)_q = (n choose n-k)_q for n <= sym_max.
Report verify_scalar_layer(const ScalarContext& ctx, long nmax, long sym_max);

}  // namespace qheis
