// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 only if every criterion passes. With
// --expect-failing=LIST (comma-separated criterion numbers) it is 0 only if
// the failing set is exactly LIST, so regressions in either direction fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qheis/verify.hpp"

using namespace qheis;

namespace {

// Bounds and limits. All comparisons are exact; only wall-clock targets
// carry a tolerance.
constexpr int kOraclePairs = 200;
constexpr long kOracleMaxExp = 6;
constexpr int kOracleMaxTerms = 4;
constexpr std::uint64_t kOracleSeed = 12345;
constexpr double kOracleSeconds = 60.0;
constexpr double kLeakageSeconds = 300.0;
constexpr double kClosureSeconds = 300.0;
constexpr int kClosureDepth = 6;
constexpr long kClosureWindow = 4;
constexpr long kSymmetryMax = 12;

const std::vector<int> kGridPrimes = {2, 3, 5};

long grid_bound(int p) { return 2 * p + 2; }

struct Outcome {
  bool passed = true;
  std::string summary;
  nlohmann::json reports = nlohmann::json::array();
  double seconds = 0.0;
};

// Folds reports into an outcome; `detail` names the report in the summary.
void absorb(Outcome& o, const Report& r, const std::string& detail) {
  o.reports.push_back(r.to_json());
  if (!r.passed()) {
    o.passed = false;
    std::ostringstream s;
    s << detail << ": " << r.violations.size() << " violations";
    o.summary += (o.summary.empty() ? "" : "; ") + s.str();
  }
}

std::string pstr(int p) { return "p=" + std::to_string(p); }

Outcome criterion1() {
  Outcome o;
  std::vector<const ScalarContext*> ctxs;
  for (int p = 2; p <= 6; ++p) ctxs.push_back(&ScalarContext::torsion(p));
  ctxs.push_back(&ScalarContext::generic());
  double total = 0;
  for (const auto* ctx : ctxs) {
    const Report r = verify_oracle_equivalence(*ctx, kOraclePairs, kOracleMaxExp, kOracleMaxTerms, kOracleSeed);
    total += r.elapsed;
    absorb(o, r, ctx->describe());
  }
  if (total >= kOracleSeconds) {
    o.passed = false;
    o.summary += (o.summary.empty() ? "" : "; ") + std::string("over the time target");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  double total = 0;
  for (int p : kGridPrimes) {
    const long b = grid_bound(p);
    const Report r = verify_no_n_leakage(ScalarContext::torsion(p), {b, b});
    total += r.elapsed;
    absorb(o, r, pstr(p));
  }
  if (total >= kLeakageSeconds) {
    o.passed = false;
    o.summary += "; over the time target";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int p : kGridPrimes) absorb(o, verify_equal_exponent_commutators(ScalarContext::torsion(p), 2 * p, 2 * p), pstr(p));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int p : kGridPrimes) {
    const Report r = verify_constructor_identities(ScalarContext::torsion(p), 2 * p + 1, 2 * p + 1);
    absorb(o, r, pstr(p));
    if (!r.passed()) {
      std::string failing;
      for (const auto& [name, counts] : r.notes["identities"].items())
        if (!counts.contains("diagnostic") && counts["failed"].get<int>() > 0)
          failing += (failing.empty() ? "" : ",") + name;
      o.summary += " (" + failing + ")";
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  double total = 0;
  for (int p : {2, 3}) {
    const Report r = verify_closure(ScalarContext::torsion(p), kClosureDepth, Window{kClosureWindow, kClosureWindow, 0});
    total += r.elapsed;
    absorb(o, r, pstr(p));
    const std::string key = "shifted_c_power_C^" + std::to_string(p + 1) + "_in_closure";
    if (r.notes.contains(key)) o.summary += std::string(" [C^") + std::to_string(p + 1) + (r.notes[key].get<bool>() ? " reached]" : " not reached]");
  }
  if (total >= kClosureSeconds) {
    o.passed = false;
    o.summary += "; over the time target";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int p = 2; p <= 5; ++p) absorb(o, verify_pow_product_identity(ScalarContext::torsion(p), 2 * p), "closed form " + pstr(p));
  for (int p : kGridPrimes) {
    const long b = grid_bound(p);
    absorb(o, verify_torsion_paths(ScalarContext::torsion(p), {b, b}, 2 * p), "fast path " + pstr(p));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int p = 2; p <= 7; ++p) {
    const Report r = verify_scalar_layer(ScalarContext::torsion(p), 3 * p, kSymmetryMax);
    absorb(o, r, pstr(p));
    if (!r.passed()) o.summary += " " + r.notes["failures_by_kind"].dump();
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int p : kGridPrimes) {
    const long b = grid_bound(p);
    absorb(o, verify_gradation(ScalarContext::torsion(p), {b, b}), pstr(p));
  }
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<int>> expected_failing;
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--expect-failing=", 0) == 0) {
      expected_failing = parse_list(arg.substr(17));
    } else if (arg.rfind("--json=", 0) == 0) {
      json_path = arg.substr(7);
    } else {
      std::cerr << "usage: " << argv[0] << " [--expect-failing=N,M,...] [--json=PATH]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", criterion1},
      {"no commutator touches N", criterion2},
      {"equal-exponent mixed commutators", criterion3},
      {"constructor identities", criterion4},
      {"closure soundness and reachability", criterion5},
      {"torsion reductions", criterion6},
      {"scalar layer", criterion7},
      {"gradation", criterion8},
  };

  std::set<int> failing;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].second();
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) failing.insert(n);
    std::cout << "criterion " << n << " " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed;
    std::cout.precision(2);
    std::cout << o.seconds << " s)";
    if (!o.summary.empty()) std::cout << "  " << o.summary;
    std::cout << std::endl;
    all.push_back({{"criterion", n}, {"name", criteria[i].first}, {"passed", o.passed}, {"seconds", o.seconds},
                   {"reports", o.reports}});
  }

  if (!json_path.empty()) std::ofstream(json_path) << all.dump(2) << "\n";

  if (!expected_failing) return failing.empty() ? 0 : 1;
  if (failing == *expected_failing) {
    std::cout << "failing set matches the expected set" << std::endl;
    return 0;
  }
  std::cout << "failing set differs from the expected set" << std::endl;
  return 1;
}
