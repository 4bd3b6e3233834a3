#include "qheis/verify.hpp"

#include <chrono>
#include <utility>
#include <vector>

#include "qheis/algebra.hpp"
#include "qheis/closure.hpp"
#include "qheis/constructors.hpp"
#include "qheis/free_algebra.hpp"
#include "qheis/qcombinatorics.hpp"
#include "qheis/torsion.hpp"

namespace qheis {

void Report::add_violation(nlohmann::json v) { violations.push_back(std::move(v)); }

nlohmann::json Report::to_json() const {
  nlohmann::json j = {{"claim", claim},
                      {"parameters", parameters},
                      {"pairs_checked", pairs_checked},
                      {"violations", violations},
                      {"elapsed", elapsed}};
  if (!notes.empty()) j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Monomial> grid(const Bounds& b) {
  std::vector<Monomial> out;
  for (long d = -b.dmax; d <= b.dmax; ++d)
    for (long k = 0; k <= b.kmax; ++k) out.push_back({k, d});
  return out;
}

nlohmann::json base_parameters(const ScalarContext& ctx) {
  nlohmann::json j = {{"mode", ctx.is_torsion() ? "torsion" : "generic"}};
  if (ctx.is_torsion()) j["p"] = ctx.order();
  return j;
}

nlohmann::json bounds_parameters(const ScalarContext& ctx, const Bounds& b) {
  auto j = base_parameters(ctx);
  j["kmax"] = b.kmax;
  j["dmax"] = b.dmax;
  return j;
}

nlohmann::json pair_json(const Monomial& x, const Monomial& y) {
  return {{"left", x.to_string()}, {"right", y.to_string()}};
}

// Ordered pairs (x, y) and (y, x) share one evaluation: [y, x] = -[x, y].
template <class F>
void for_each_commutator(const std::vector<Monomial>& g, const ScalarContext& ctx, Report& r, F&& check) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) {
      Element c = commutator(Element(ctx, g[i]), Element(ctx, g[j]));
      check(g[i], g[j], c);
      r.pairs_checked += 1;
      if (j != i) {
        check(g[j], g[i], -c);
        r.pairs_checked += 1;
      }
    }
}

}  // namespace

Element random_element(const ScalarContext& ctx, std::mt19937_64& rng, long max_exp, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long> kdist(0, max_exp), ddist(-max_exp, max_exp), qdist(0, 3);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Element x(ctx);
  const int n = nterms(rng);
  while (static_cast<int>(x.size()) < n) {
    const Monomial m{kdist(rng), ddist(rng)};
    int c = 0;
    while (c == 0) c = num(rng);
    Rational value(c, den(rng));
    value.canonicalize();
    const Scalar coeff = Scalar(ctx, value) * Scalar::q_power(ctx, qdist(rng));
    if (!x.contains(m)) x.add_term(m, coeff);
  }
  return x;
}

Report verify_oracle_equivalence(const ScalarContext& ctx, int pairs, long max_exp, int max_terms,
                                 std::uint64_t seed) {
  Report r;
  r.claim = "structure-constant multiplication equals word rewriting followed by basis conversion";
  r.parameters = base_parameters(ctx);
  r.parameters["pairs"] = pairs;
  r.parameters["max_exp"] = max_exp;
  r.parameters["max_terms"] = max_terms;
  r.parameters["seed"] = seed;
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const Element x = random_element(ctx, rng, max_exp, max_terms);
    const Element y = random_element(ctx, rng, max_exp, max_terms);
    r.pairs_checked += 1;
    const Element direct = multiply(x, y);
    const Element words = multiply_by_rewriting(x, y);
    if (direct != words)
      r.add_violation({{"left", x.to_json()}, {"right", y.to_json()}, {"direct", direct.to_json()},
                       {"rewriting", words.to_json()}});
  }
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_no_n_leakage(const ScalarContext& ctx, const Bounds& bounds) {
  Report r;
  r.claim = "commutators of basis monomials have no component in N";
  r.parameters = bounds_parameters(ctx, bounds);
  const auto start = Clock::now();
  for_each_commutator(grid(bounds), ctx, r, [&](const Monomial& x, const Monomial& y, const Element& c) {
    Element leak = project_n(c);
    if (!leak.is_zero()) {
      auto v = pair_json(x, y);
      v["n_component"] = leak.to_json();
      r.add_violation(std::move(v));
    }
  });
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_derived_algebra(const ScalarContext& ctx, const Bounds& bounds, LieBasisConvention convention) {
  Report r;
  r.claim = "commutators of Lie basis monomials lie in the derived algebra";
  r.parameters = bounds_parameters(ctx, bounds);
  r.parameters["convention"] = to_string(convention);
  const auto start = Clock::now();
  std::vector<Monomial> lie;
  for (const auto& m : grid(bounds))
    if (classify_monomial(ctx, m, convention).is_lie) lie.push_back(m);
  for_each_commutator(lie, ctx, r, [&](const Monomial& x, const Monomial& y, const Element& c) {
    Element bad(ctx);
    for (const auto& [m, coeff] : c.terms()) {
      const bool generator = m == Monomial::gen_a() || m == Monomial::gen_b();
      if (generator || !classify_monomial(ctx, m, convention).is_lie) bad.add_term(m, coeff);
    }
    if (!bad.is_zero()) {
      auto v = pair_json(x, y);
      v["outside_terms"] = bad.to_json();
      r.add_violation(std::move(v));
    }
  });
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_equal_exponent_commutators(const ScalarContext& ctx, long mr_max, long ns_max) {
  Report r;
  r.claim = "[C^m A^n, B^s C^r] has only terms with C-exponent >= 2 on Lie basis monomials, "
            "and is a polynomial in C when n = s";
  r.parameters = base_parameters(ctx);
  r.parameters["mr_max"] = mr_max;
  r.parameters["ns_max"] = ns_max;
  const auto start = Clock::now();
  for (long m = 1; m <= mr_max; ++m)
    for (long rr = 1; rr <= mr_max; ++rr)
      for (long n = 1; n <= ns_max; ++n)
        for (long s = 1; s <= ns_max; ++s) {
          const Monomial x = Monomial::c_a(m, n), y = Monomial::b_c(s, rr);
          Element c = commutator(Element(ctx, x), Element(ctx, y));
          r.pairs_checked += 1;
          Element bad(ctx);
          for (const auto& [mono, coeff] : c.terms()) {
            bool ok = mono.k >= 2 && classify_monomial(ctx, mono).is_lie;
            if (n == s) ok = ok && mono.d == 0;
            if (!ok) bad.add_term(mono, coeff);
          }
          if (!bad.is_zero()) {
            auto v = pair_json(x, y);
            v["offending_terms"] = bad.to_json();
            r.add_violation(std::move(v));
          }
        }
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_closure(const ScalarContext& ctx, int depth, const Window& window, LieBasisConvention convention) {
  Report r;
  r.claim = "bracket closure stays in the Lie basis span, and every Lie basis monomial is constructed";
  r.parameters = base_parameters(ctx);
  r.parameters["depth"] = depth;
  r.parameters["window"] = window.to_json();
  r.parameters["convention"] = to_string(convention);
  const auto start = Clock::now();

  const ClosureResult closure = lie_closure(ctx, depth, window);
  nlohmann::json layer_sizes = nlohmann::json::array();
  for (const auto& layer : closure.layers) {
    layer_sizes.push_back(layer.size());
    for (const auto& e : layer) {
      r.pairs_checked += 1;
      Membership mem = is_lie_polynomial(e, convention);
      if (!mem.is_lie) r.add_violation({{"kind", "closure-residual"}, {"residual", mem.residual.to_json()}});
    }
  }
  r.notes["layer_sizes"] = layer_sizes;
  r.notes["window_dimension"] = closure.basis.dimension();

  RowEchelon span(ctx);
  for (const auto& row : closure.basis.rows) span.insert(row);
  long constructed = 0, reached_by_closure = 0;
  for (const auto& m : window.monomials()) {
    if (!classify_monomial(ctx, m, convention).is_lie) continue;
    r.pairs_checked += 1;
    if (span.contains(Element(ctx, m))) ++reached_by_closure;
    try {
      Construction c = construct_basis_element(ctx, m);
      if (c.value != Element(ctx, m)) {
        r.add_violation({{"kind", "construction-mismatch"},
                         {"monomial", m.to_string()},
                         {"recipe", c.recipe},
                         {"value", c.value.to_json()}});
      } else {
        ++constructed;
      }
    } catch (const ConstructionError& e) {
      r.add_violation({{"kind", "construction-failed"}, {"monomial", m.to_string()}, {"error", e.what()}});
    }
  }
  r.notes["constructed"] = constructed;
  r.notes["reached_by_closure"] = reached_by_closure;
  if (ctx.is_torsion()) {
    const Monomial shifted = Monomial::c_power(ctx.order() + 1);
    if (window.contains(shifted))
      r.notes["shifted_c_power_" + shifted.to_string() + "_in_closure"] = span.contains(Element(ctx, shifted));
  }
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_torsion_paths(const ScalarContext& ctx, const Bounds& bounds, long lmax) {
  Report r;
  r.claim = "fast multiplication and central-factor products agree with structure-constant multiplication";
  r.parameters = bounds_parameters(ctx, bounds);
  r.parameters["lmax"] = lmax;
  const auto start = Clock::now();
  const auto g = grid(bounds);
  for (const auto& x : g)
    for (const auto& y : g) {
      r.pairs_checked += 1;
      Element fast = multiply_monomials_fastpath(ctx, x, y);
      Element general = multiply_monomials(ctx, x, y);
      if (fast != general) {
        auto v = pair_json(x, y);
        v["kind"] = "fastpath";
        v["fast"] = fast.to_json();
        v["general"] = general.to_json();
        r.add_violation(std::move(v));
      }
    }
  const long p = ctx.order();
  for (long l = p; l <= lmax; ++l) {
    const Element al(ctx, Monomial::c_a(0, l)), bl(ctx, Monomial::b_c(l, 0));
    r.pairs_checked += 2;
    if (a_pow_b_pow(ctx, l) != multiply(al, bl)) r.add_violation({{"kind", "A^l B^l"}, {"l", l}});
    if (b_pow_a_pow(ctx, l) != multiply(bl, al)) r.add_violation({{"kind", "B^l A^l"}, {"l", l}});
  }
  for (long n = 1; n <= 2; ++n)
    for (const auto& m : {Monomial::c_a(0, n * p), Monomial::b_c(n * p, 0), Monomial::c_power(n * p)}) {
      r.pairs_checked += 1;
      if (!is_central(Element(ctx, m))) r.add_violation({{"kind", "not-central"}, {"monomial", m.to_string()}});
    }
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_pow_product_identity(const ScalarContext& ctx, long lmax) {
  Report r;
  r.claim = "A^l B^l = B^l A^l = (I - (-1)^l C^l) / (1 - q)^l for l >= p";
  r.parameters = base_parameters(ctx);
  r.parameters["lmax"] = lmax;
  const auto start = Clock::now();
  for (long l = ctx.order(); l <= lmax; ++l) {
    const Element al(ctx, Monomial::c_a(0, l)), bl(ctx, Monomial::b_c(l, 0));
    const Element claimed = pow_product_identity(ctx, l);
    const std::pair<const char*, Element> products[] = {{"A^l B^l", multiply(al, bl)},
                                                        {"B^l A^l", multiply(bl, al)}};
    for (const auto& [name, actual] : products) {
      r.pairs_checked += 1;
      if (claimed != actual)
        r.add_violation({{"kind", name}, {"l", l}, {"claimed", claimed.to_string()}, {"actual", actual.to_string()}});
    }
  }
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_gradation(const ScalarContext& ctx, const Bounds& bounds) {
  Report r;
  r.claim = "products of homogeneous elements land in the summed grade";
  r.parameters = bounds_parameters(ctx, bounds);
  const auto start = Clock::now();
  const auto g = grid(bounds);
  for (const auto& x : g)
    for (const auto& y : g) {
      r.pairs_checked += 1;
      Element prod = multiply_monomials(ctx, x, y);
      if (!is_homogeneous(prod, x.grade() + y.grade())) {
        auto v = pair_json(x, y);
        v["product"] = prod.to_json();
        r.add_violation(std::move(v));
      }
    }
  r.elapsed = seconds_since(start);
  return r;
}

namespace {

// Per-identity pass/fail counts plus a violation entry for each failure.
class IdentityTally {
 public:
  explicit IdentityTally(Report& r) : r_(r) {}

  void check(const std::string& name, const nlohmann::json& at, const Element& got, const Element& want,
             bool counted = true) {
    auto& t = counts_[name];
    if (t.is_null()) t = {{"checked", 0}, {"failed", 0}};
    t["checked"] = t.value("checked", 0) + 1;
    const bool ok = got == want;
    t["failed"] = t.value("failed", 0) + (ok ? 0 : 1);
    if (!counted) {
      t["diagnostic"] = true;
      return;
    }
    r_.pairs_checked += 1;
    if (!ok) {
      nlohmann::json v = {{"identity", name}, {"at", at}, {"expected", want.to_string()}, {"actual", got.to_string()}};
      r_.add_violation(std::move(v));
    }
  }

  void finish() { r_.notes["identities"] = counts_; }

 private:
  Report& r_;
  nlohmann::json counts_ = nlohmann::json::object();
};

Scalar qpow(const ScalarContext& ctx, long n) { return Scalar::q_power(ctx, n); }
Scalar one_minus_qn(const ScalarContext& ctx, long n) { return Scalar::one(ctx) - qpow(ctx, n); }
Scalar qn_minus_one(const ScalarContext& ctx, long n) { return qpow(ctx, n) - Scalar::one(ctx); }

}  // namespace

Report verify_constructor_identities(const ScalarContext& ctx, long kmax, long lmax) {
  Report r;
  r.claim = "bracket constructors match their closed forms and isolate single basis monomials";
  r.parameters = base_parameters(ctx);
  r.parameters["kmax"] = kmax;
  r.parameters["lmax"] = lmax;
  const auto start = Clock::now();
  IdentityTally tally(r);
  const long p = ctx.order();
  auto divisible = [&](long n) { return divisible_by_order(ctx, n); };
  auto mono = [&](const Monomial& m) { return Element(ctx, m); };
  auto kl = [](long k, long l) { return nlohmann::json{{"k", k}, {"l", l}}; };

  for (long k = 0; k <= kmax; ++k) {
    const nlohmann::json at = {{"k", k}};
    const Element g = base_g(ctx, k);
    tally.check("base_g_closed", at, g, base_g_closed(ctx, k));
    tally.check("base_g_closed_evaluated", at, g, base_g_closed_corrected(ctx, k), false);
    tally.check("base_g_weighted_sum", at, base_g_weighted_sum(ctx, k),
                Element(Monomial::c_power(k + 2), -q_int(ctx, k + 1)));
    if (!divisible(k + 1)) {
      tally.check("obase_g", at, obase_g(ctx, k), mono(Monomial::c_power(k + 2)));
      // C^(k+2) as -q^k (1-q) / (1 - q^(k+1)) sum_i base_g(i) / (q-1)^(1+i)
      Element sum(ctx);
      for (long i = 0; i <= k; ++i) sum += qn_minus_one(ctx, 1).pow(-(1 + i)) * base_g(ctx, i);
      tally.check("combase1", at, -(qpow(ctx, k) * one_minus_qn(ctx, 1) / one_minus_qn(ctx, k + 1)) * sum,
                  mono(Monomial::c_power(k + 2)));
    } else if (k >= 1) {
      const Element ca = qn_minus_one(ctx, 1).pow(-k) * base_a(ctx, k - 1, 1);
      const Element bba = eval_bracket_expr(
          BracketExpr::bracket(BracketExpr::b(), BracketExpr::bracket(BracketExpr::b(), BracketExpr::a())), ctx);
      tally.check("combase1a", at, commutator(ca, qn_minus_one(ctx, 1).inverse() * bba),
                  mono(Monomial::c_power(k + 2)));
    }

    for (long l = 1; l <= lmax; ++l) {
      const Element a = base_a(ctx, k, l), b = base_b(ctx, k, l);
      tally.check("base_a_closed", kl(k, l), a, base_a_closed(ctx, k, l));
      tally.check("base_b_closed", kl(k, l), b, base_b_closed(ctx, k, l));
      if (!divisible(l)) {
        tally.check("obase_a", kl(k, l), obase_a(ctx, k, l), mono(Monomial::c_a(k + 1, l)));
        const Scalar s = -(one_minus_qn(ctx, 1).pow(l) * qn_minus_one(ctx, l).pow(k)).inverse();
        tally.check("combase2", kl(k, l), s * a, mono(Monomial::c_a(k + 1, l)));
      }
      if (!divisible(k + 1)) {
        tally.check("obase_b", kl(k, l), obase_b(ctx, k, l), mono(Monomial::b_c(l, k + 1)));
        const Scalar s = (qn_minus_one(ctx, 1).pow(k + 1) * one_minus_qn(ctx, k + 1).pow(l - 1)).inverse();
        tally.check("combase4", kl(k, l), s * b, mono(Monomial::b_c(l, k + 1)));
      }
      if (p > 0 && l >= 2 && divisible(l) && !divisible(k + 1)) {
        tally.check("special1", kl(k, l), wrapped_a(ctx, k, l),
                    Element(Monomial::c_a(k + 1, l), one_minus_qn(ctx, k + 1)));
        // (1-q)^(1-l) / ((1 - q^(k+1)) (q^(l-1) - 1)^k) [A, base_a(k, l-1)]
        const Scalar s = one_minus_qn(ctx, 1).pow(1 - l) / (one_minus_qn(ctx, k + 1) * qn_minus_one(ctx, l - 1).pow(k));
        tally.check("combase3", kl(k, l), s * commutator(Element::gen_a(ctx), base_a(ctx, k, l - 1)),
                    mono(Monomial::c_a(k + 1, l)));
      }
      if (p > 0 && k >= 1 && divisible(k + 1) && !divisible(l)) {
        tally.check("special2", kl(k, l), wrapped_b(ctx, k, l),
                    Element(Monomial::b_c(l, k + 1), one_minus_qn(ctx, l)));
        // [base_b(np-2, l), C] / ((1 - q^l) (q-1)^(np-1) (1 - q^(np-1))^(l-1)) with np = k+1
        const long np = k + 1;
        const Scalar s = (one_minus_qn(ctx, l) * qn_minus_one(ctx, 1).pow(np - 1) *
                          one_minus_qn(ctx, np - 1).pow(l - 1)).inverse();
        tally.check("combase5", kl(k, l), s * commutator(base_b(ctx, np - 2, l), Element::gen_c(ctx)),
                    mono(Monomial::b_c(l, np)));
      }
    }
  }
  tally.finish();
  r.elapsed = seconds_since(start);
  return r;
}

Report verify_scalar_layer(const ScalarContext& ctx, long nmax, long sym_max) {
  Report r;
  r.claim = "q-integers vanish exactly at multiples of p; q-binomials are nonzero below p and collapse "
            "to 0/1 from p on; q-binomials are symmetric";
  r.parameters = base_parameters(ctx);
  r.parameters["nmax"] = nmax;
  r.parameters["sym_max"] = sym_max;
  const auto start = Clock::now();
  const long p = ctx.order();
  nlohmann::json failures = nlohmann::json::object();
  auto fail = [&](const std::string& kind, nlohmann::json v) {
    failures[kind] = failures.contains(kind) ? failures[kind].get<int>() + 1 : 1;
    v["kind"] = kind;
    r.add_violation(std::move(v));
  };
  for (long n = 1; n <= nmax; ++n) {
    r.pairs_checked += 1;
    if (q_int(ctx, n).is_zero() != divisible_by_order(ctx, n)) fail("q-integer", {{"n", n}});
  }
  for (long l = 1; l <= nmax; ++l)
    for (long i = 0; i <= l; ++i) {
      r.pairs_checked += 1;
      const Scalar b = q_binomial(ctx, l, i);
      if (l < p) {
        if (b.is_zero()) fail("below-p-nonzero", {{"l", l}, {"i", i}});
      } else if (i == 0 || i == l) {
        if (!b.is_one()) fail("collapse-ends", {{"l", l}, {"i", i}, {"value", b.to_string()}});
      } else if (!b.is_zero()) {
        fail("collapse-interior", {{"l", l}, {"i", i}, {"value", b.to_string()}});
      }
    }
  for (long n = 0; n <= sym_max; ++n)
    for (long k = 0; k <= n; ++k) {
      r.pairs_checked += 1;
      if (q_binomial(ctx, n, k) != q_binomial(ctx, n, n - k)) fail("symmetry", {{"n", n}, {"k", k}});
    }
  r.notes["failures_by_kind"] = failures;
  r.elapsed = seconds_since(start);
  return r;
}

}  // namespace qheis
