#include "commands.hpp"

#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

#include "expr.hpp"
#include "qheis/algebra.hpp"
#include "qheis/closure.hpp"
#include "qheis/constructors.hpp"
#include "qheis/qcombinatorics.hpp"
#include "qheis/verify.hpp"

namespace qheis::cli {

using nlohmann::json;

const ScalarContext& Config::context() const {
  if (p == "generic") return ScalarContext::generic();
  long value = 0;
  std::size_t used = 0;
  try {
    value = std::stol(p, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != p.size() || value < 2 || value > 1000)
    throw UsageError("--p must be an integer in [2, 1000] or 'generic', got '" + p + "'");
  return ScalarContext::torsion(static_cast<int>(value));
}

const ScalarContext& Config::torsion_context(const std::string& command) const {
  const ScalarContext& ctx = context();
  if (!ctx.is_torsion()) throw UsageError(command + " needs a torsion order: pass --p <int>");
  return ctx;
}

LieBasisConvention Config::convention() const {
  if (defn2_literal && exclude_central_c_powers)
    throw UsageError("--defn2-literal and --exclude-central-c-powers are mutually exclusive");
  if (defn2_literal) return LieBasisConvention::ExcludeShiftedCPowers;
  if (exclude_central_c_powers) return LieBasisConvention::ExcludeCentralCPowers;
  return LieBasisConvention::Constructive;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"lemma2", "lemma3", "lemma4", "theorem1", "torsion-paths",
                                                  "oracle", "scalars", "gradation", "all"};
  return suites;
}

namespace {

json context_json(const ScalarContext& ctx) {
  json j = {{"mode", ctx.is_torsion() ? "torsion" : "generic"}};
  if (ctx.is_torsion()) j["p"] = ctx.order();
  return j;
}

// Writes the payload to --out if requested and to `out` in JSON mode; text
// mode prints `text` instead.
int emit(const Config& cfg, const json& payload, const std::string& text, std::ostream& out, int code) {
  if (cfg.out) {
    std::ofstream f(*cfg.out);
    if (!f) throw UsageError("cannot open --out path '" + *cfg.out + "'");
    f << payload.dump(2) << "\n";
  }
  if (cfg.format == Format::Json)
    out << payload.dump(2) << "\n";
  else
    out << text;
  return code;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ContextMismatch& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

json element_json(const Element& x) { return {{"text", x.to_string()}, {"element", x.to_json()}}; }

std::string membership_text(const Membership& m) {
  return std::string("lie: ") + (m.is_lie ? "yes" : "no") + "\nresidual: " + m.residual.to_string() + "\n";
}

}  // namespace

int cmd_normalize(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.context();
    const Element x = evaluate(expr, ctx);
    json payload = {{"command", "normalize"}, {"context", context_json(ctx)}, {"input", expr}, {"result", element_json(x)}};
    return emit(cfg, payload, x.to_string() + "\n", out, kExitOk);
  });
}

int cmd_comm(const Config& cfg, const std::string& x, const std::string& y, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.context();
    const Element c = commutator(evaluate(x, ctx), evaluate(y, ctx));
    json payload = {{"command", "comm"},
                    {"context", context_json(ctx)},
                    {"input", {x, y}},
                    {"result", element_json(c)}};
    return emit(cfg, payload, c.to_string() + "\n", out, kExitOk);
  });
}

int cmd_member(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.torsion_context("member");
    const LieBasisConvention conv = cfg.convention();
    const Element x = evaluate(expr, ctx);
    const Membership mem = is_lie_polynomial(x, conv);
    json payload = {{"command", "member"},
                    {"context", context_json(ctx)},
                    {"convention", to_string(conv)},
                    {"input", expr},
                    {"element", element_json(x)},
                    {"is_lie", mem.is_lie},
                    {"residual", element_json(mem.residual)}};
    std::string text = membership_text(mem);
    if (mem.is_lie && x.is_monomial()) {
      const Monomial m = x.terms().begin()->first;
      try {
        const Construction c = construct_basis_element(ctx, m);
        payload["witness"] = {{"recipe", c.recipe}, {"expr", c.expr.to_string()}};
        text += "witness (" + c.recipe + "): " + c.expr.to_string() + "\n";
      } catch (const ConstructionError& e) {
        payload["witness"] = {{"error", e.what()}};
        text += std::string("witness: none (") + e.what() + ")\n";
      }
    }
    return emit(cfg, payload, text, out, kExitOk);
  });
}

int cmd_construct(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.torsion_context("construct");
    const Element x = evaluate(expr, ctx);
    if (!x.is_monomial()) throw UsageError("construct needs a single basis monomial, got " + x.to_string());
    const Monomial m = x.terms().begin()->first;
    std::optional<Construction> built;
    try {
      built = construct_basis_element(ctx, m);
    } catch (const ConstructionError& e) {
      json payload = {{"command", "construct"}, {"context", context_json(ctx)}, {"input", expr}, {"error", e.what()}};
      emit(cfg, payload, "", out, kExitViolation);
      err << "no construction: " << e.what() << "\n";
      return kExitViolation;
    }
    const Construction& c = *built;
    const bool exact = c.value == x;
    json payload = {{"command", "construct"},
                    {"context", context_json(ctx)},
                    {"input", expr},
                    {"monomial", m.to_string()},
                    {"recipe", c.recipe},
                    {"expr", c.expr.to_string()},
                    {"depth", c.expr.depth()},
                    {"value", element_json(c.value)},
                    {"exact", exact}};
    std::string text = "monomial: " + m.to_string() + "\nrecipe: " + c.recipe + "\nexpr: " + c.expr.to_string() +
                       "\nvalue: " + c.value.to_string() + "\nexact: " + (exact ? "yes" : "no") + "\n";
    return emit(cfg, payload, text, out, exact ? kExitOk : kExitViolation);
  });
}

int cmd_closure(const Config& cfg, const ClosureArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.context();
    if (args.depth < 1) throw UsageError("--depth must be >= 1");
    if (args.kmax < 0 || args.dmax < 0) throw UsageError("--kmax and --dmax must be >= 0");
    const Window window{args.kmax, args.dmax, 0};
    const ClosureResult res = lie_closure(ctx, args.depth, window, ClosureOptions{std::max(1u, args.threads)});
    json layers = json::array();
    std::string text = "layer sizes:";
    for (const auto& layer : res.layers) {
      layers.push_back(layer.size());
      text += " " + std::to_string(layer.size());
    }
    text += "\ndimension: " + std::to_string(res.basis.dimension()) + "\n";
    for (const auto& row : res.basis.rows) text += "  " + row.to_string() + "\n";
    json payload = {{"command", "closure"},
                    {"context", context_json(ctx)},
                    {"depth", args.depth},
                    {"layer_sizes", layers},
                    {"basis", res.basis.to_json()}};
    return emit(cfg, payload, text, out, kExitOk);
  });
}

namespace {

std::vector<Report> run_suite(const std::string& suite, const ScalarContext& ctx, const Config& cfg,
                              const VerifyArgs& a) {
  const long p = ctx.order();
  const Bounds grid{a.kmax.value_or(2 * p + 2), a.dmax.value_or(2 * p + 2)};
  auto need_torsion = [&] {
    if (!ctx.is_torsion()) throw UsageError("verify " + suite + " needs a torsion order: pass --p <int>");
  };
  if (suite == "oracle")
    return {verify_oracle_equivalence(ctx, a.pairs.value_or(200), a.kmax.value_or(6), 4, cfg.seed)};
  need_torsion();
  const LieBasisConvention conv = cfg.convention();
  if (suite == "lemma2") return {verify_no_n_leakage(ctx, grid), verify_derived_algebra(ctx, grid, conv)};
  if (suite == "lemma3") return {verify_equal_exponent_commutators(ctx, a.kmax.value_or(2 * p), a.dmax.value_or(2 * p))};
  if (suite == "lemma4")
    return {verify_constructor_identities(ctx, a.kmax.value_or(2 * p + 1), a.lmax.value_or(2 * p + 1))};
  if (suite == "theorem1")
    return {verify_closure(ctx, a.depth.value_or(6), Window{a.kmax.value_or(4), a.dmax.value_or(4), 0}, conv)};
  if (suite == "torsion-paths") {
    const long lmax = a.lmax.value_or(2 * p);
    return {verify_torsion_paths(ctx, grid, lmax), verify_pow_product_identity(ctx, lmax)};
  }
  if (suite == "scalars") return {verify_scalar_layer(ctx, a.lmax.value_or(3 * p), 12)};
  if (suite == "gradation") return {verify_gradation(ctx, grid)};
  throw UsageError("unknown verify suite '" + suite + "'");
}

}  // namespace

int cmd_verify(const Config& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.context();
    std::vector<std::string> suites;
    if (args.suite == "all") {
      const auto& all = verify_suites();
      suites.assign(all.begin(), all.end() - 1);
    } else {
      suites.push_back(args.suite);
    }
    json results = json::array();
    json timing = json::object();
    std::string text;
    bool ok = true;
    for (const auto& suite : suites) {
      for (const Report& r : run_suite(suite, ctx, cfg, args)) {
        json j = r.to_json();
        j.erase("elapsed");
        j["suite"] = suite;
        results.push_back(j);
        timing[suite + ": " + r.claim] = r.elapsed;
        ok = ok && r.passed();
        text += std::string(r.passed() ? "PASS" : "FAIL") + "  [" + suite + "] " + r.claim + " (" +
                std::to_string(r.pairs_checked) + " checks, " + std::to_string(r.violations.size()) +
                " violations)\n";
        const std::size_t shown = std::min<std::size_t>(r.violations.size(), 3);
        for (std::size_t i = 0; i < shown; ++i) text += "      " + r.violations[i].dump() + "\n";
      }
    }
    json payload = {{"command", "verify"},
                    {"context", context_json(ctx)},
                    {"payload", {{"passed", ok}, {"reports", results}}},
                    {"timing", timing}};
    return emit(cfg, payload, text, out, ok ? kExitOk : kExitViolation);
  });
}

int cmd_tables(const Config& cfg, const TablesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScalarContext& ctx = cfg.context();
    if (args.kmax < 0 || args.lmax < 1) throw UsageError("tables needs --kmax >= 0 and --lmax >= 1");
    std::vector<Monomial> grid;
    for (long d = -args.lmax; d <= args.lmax; ++d)
      for (long k = 0; k <= args.kmax; ++k) grid.push_back({k, d});
    json products = json::array();
    std::string text = "products:\n";
    for (const auto& x : grid)
      for (const auto& y : grid) {
        const Element prod = multiply_monomials(ctx, x, y);
        products.push_back({{"left", x.to_string()}, {"right", y.to_string()}, {"product", element_json(prod)}});
        text += "  (" + x.to_string() + ") * (" + y.to_string() + ") = " + prod.to_string() + "\n";
      }
    json c = json::array(), d = json::array();
    text += "A^l B^l = sum_i c_i(l) C^i, B^l A^l = sum_i d_i(l) C^i:\n";
    for (long l = 1; l <= args.lmax; ++l)
      for (long i = 0; i <= l; ++i) {
        const Scalar ci = struct_c(ctx, i, l), di = struct_d(ctx, i, l);
        c.push_back({{"l", l}, {"i", i}, {"value", ci.to_string()}});
        d.push_back({{"l", l}, {"i", i}, {"value", di.to_string()}});
        text += "  l=" + std::to_string(l) + " i=" + std::to_string(i) + "  c = " + ci.to_string() +
                "  d = " + di.to_string() + "\n";
      }
    json payload = {{"command", "tables"},
                    {"context", context_json(ctx)},
                    {"kmax", args.kmax},
                    {"lmax", args.lmax},
                    {"products", products},
                    {"c", c},
                    {"d", d}};
    return emit(cfg, payload, text, out, kExitOk);
  });
}

}  // namespace qheis::cli
