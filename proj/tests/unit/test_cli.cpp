#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "expr.hpp"
#include "helpers.hpp"

using namespace qheis;
using namespace qheis::cli;
using namespace qheis::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run capture(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

Config config(const std::string& p, Format format = Format::Text) {
  Config c;
  c.p = p;
  c.format = format;
  return c;
}

}  // namespace

TEST_CASE("parser builds the expected tree") {
  CHECK(parse_expression("A*B - q*B*A")->to_string() == "((A * B) - ((q * B) * A))");
  CHECK(parse_expression("[A,B]^2*A")->to_string() == "([A, B]^2 * A)");
  CHECK(parse_expression("[[B,A],A]")->to_string() == "[[B, A], A]");
  CHECK(parse_expression("-A^2 + 3/4*q")->to_string() == "(-A^2 + ((3 / 4) * q))");
  CHECK(parse_expression("  ( A ) ")->to_string() == "A");
}

TEST_CASE("parser errors carry line and column") {
  auto error_at = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("A*(B") == std::pair{1, 5});
  CHECK(error_at("A + + B") == std::pair{1, 5});
  CHECK(error_at("A\n  * x") == std::pair{2, 5});
  CHECK(error_at("[A B]") == std::pair{1, 4});
  CHECK(error_at("A^") == std::pair{1, 3});
  CHECK(error_at("A B") == std::pair{1, 3});
  CHECK(error_at("") == std::pair{1, 1});
  CHECK_THROWS_WITH_AS(parse_expression("A^99999"), doctest::Contains("exponent overflow"), ParseError);
  CHECK_THROWS_WITH_AS(parse_expression("A^12345678901234567890"), doctest::Contains("exponent overflow"), ParseError);
  CHECK_NOTHROW(parse_expression("C^4096"));
}

TEST_CASE("elaboration") {
  for (const auto* ctx : {&gen(), &tor(2), &tor(3)}) {
    const auto& c = *ctx;
    CHECK(evaluate("A*B - q*B*A", c) == ident(c));
    CHECK(evaluate("[A,B]^2*A", c) == mono(c, 2, -1));
    CHECK(evaluate("[[B,A],A]", c) == term(qm1(c), 1, -1));
    CHECK(evaluate("I", c) == ident(c));
    CHECK(evaluate("B^2*A", c) == term(qm1(c).inverse(), 1, 1) - term(qm1(c).inverse(), 0, 1));
    CHECK(evaluate("C", c) == C(c));
    CHECK(evaluate("A*C - q*C*A", c).is_zero());
    CHECK(evaluate("(A + B)^2", c) == multiply(A(c) + B(c), A(c) + B(c)));
    CHECK(evaluate("2/3*A", c) == term(num(c, 2, 3), 0, -1));
    CHECK(evaluate("A/(q-1)", c) == term(qm1(c).inverse(), 0, -1));
    CHECK(evaluate("q^0", c) == ident(c));
    CHECK(evaluate("0*A", c).is_zero());
  }
  CHECK(evaluate("q^3*A", tor(3)) == A(tor(3)));
  CHECK_THROWS_AS(evaluate("A/B", gen()), ElaborationError);
  CHECK_THROWS_AS(evaluate("A/0", gen()), ElaborationError);
  CHECK_THROWS_AS(evaluate("A/(1+q)", tor(2)), ElaborationError);
}

TEST_CASE("normalize round trip") {
  const std::vector<std::string> corpus = {
      "A*B", "B*A", "A*B*A*B", "[A,[A,B]]", "[[B,A],A] + 3*C^2", "B^3*A^2 - q^2*A^2*B^3", "(A+B)^3",
      "[C*A, B*C]", "1/2*A - 3/7*q^2*B^2*C", "[B, [B, [B, A]]]", "A^4*B^4", "C^3*A - A*C^3", "I + q*I",
  };
  for (const std::string p : {"generic", "2", "3", "5", "6"}) {
    const ScalarContext& ctx = config(p).context();
    for (const auto& e : corpus) {
      const Element first = evaluate(e, ctx);
      const Element second = evaluate(first.to_string(), ctx);
      CHECK_MESSAGE(second == first, e << " at p=" << p << " printed " << first.to_string());
    }
  }
}

TEST_CASE("config") {
  CHECK(&config("generic").context() == &gen());
  CHECK(&config("4").context() == &tor(4));
  CHECK_THROWS_AS(config("1").context(), UsageError);
  CHECK_THROWS_AS(config("x").context(), UsageError);
  CHECK_THROWS_AS(config("3x").context(), UsageError);
  Config c = config("3");
  CHECK(c.convention() == LieBasisConvention::Constructive);
  c.defn2_literal = true;
  CHECK(c.convention() == LieBasisConvention::ExcludeShiftedCPowers);
  c.exclude_central_c_powers = true;
  CHECK_THROWS_AS(c.convention(), UsageError);
}

TEST_CASE("normalize and comm commands") {
  auto r = capture([](auto& o, auto& e) { return cmd_normalize(config("3"), "q^3*A + [A,B]", o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out == "A + C\n");

  r = capture([](auto& o, auto& e) { return cmd_comm(config("generic"), "A", "B", o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out == "C\n");

  r = capture([](auto& o, auto& e) { return cmd_normalize(config("3"), "A*(B", o, e); });
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("1:5") != std::string::npos);

  r = capture([](auto& o, auto& e) { return cmd_normalize(config("1"), "A", o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("member command") {
  auto r = capture([](auto& o, auto& e) { return cmd_member(config("2"), "C^3", o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("lie: yes") != std::string::npos);
  CHECK(r.out.find("witness (c-power-central-bracket)") != std::string::npos);

  r = capture([](auto& o, auto& e) { return cmd_member(config("3"), "C^3*A^3 + C*A", o, e); });
  CHECK(r.out.find("lie: no") != std::string::npos);
  CHECK(r.out.find("residual: C^3*A^3") != std::string::npos);

  Config literal = config("2");
  literal.defn2_literal = true;
  r = capture([&](auto& o, auto& e) { return cmd_member(literal, "C^3", o, e); });
  CHECK(r.out.find("lie: no") != std::string::npos);

  r = capture([](auto& o, auto& e) { return cmd_member(config("generic"), "A", o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("construct command") {
  auto r = capture([](auto& o, auto& e) { return cmd_construct(config("3"), "C*A^3", o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("exact: yes") != std::string::npos);

  r = capture([](auto& o, auto& e) { return cmd_construct(config("2"), "C^2", o, e); });
  CHECK(r.code == kExitViolation);

  r = capture([](auto& o, auto& e) { return cmd_construct(config("3"), "A + B", o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("closure, tables and verify commands") {
  auto r = capture([](auto& o, auto& e) {
    return cmd_closure(config("3"), ClosureArgs{3, 2, 2, 1}, o, e);
  });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("dimension: 5") != std::string::npos);

  r = capture([](auto& o, auto& e) { return cmd_tables(config("2"), TablesArgs{1, 2}, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(A) * (B) = ") != std::string::npos);

  VerifyArgs lemma2;
  lemma2.suite = "lemma2";
  lemma2.kmax = 3;
  lemma2.dmax = 3;
  r = capture([&](auto& o, auto& e) { return cmd_verify(config("3"), lemma2, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  VerifyArgs scalars;
  scalars.suite = "scalars";
  r = capture([&](auto& o, auto& e) { return cmd_verify(config("2"), scalars, o, e); });
  CHECK(r.code == kExitViolation);

  r = capture([&](auto& o, auto& e) { return cmd_verify(config("generic"), lemma2, o, e); });
  CHECK(r.code == kExitUsage);
}

TEST_CASE("JSON output is byte-stable") {
  VerifyArgs a;
  a.suite = "lemma3";
  auto run = [&] {
    return capture([&](auto& o, auto& e) { return cmd_verify(config("3", Format::Json), a, o, e); });
  };
  const auto first = nlohmann::json::parse(run().out);
  const auto second = nlohmann::json::parse(run().out);
  CHECK(first["payload"].dump() == second["payload"].dump());
  CHECK(first["payload"]["passed"] == true);

  auto norm = [] {
    return capture([](auto& o, auto& e) { return cmd_normalize(config("5", Format::Json), "[A,[A,B]]", o, e); }).out;
  };
  CHECK(norm() == norm());
  const auto j = nlohmann::json::parse(norm());
  CHECK(Element::from_json(j["result"]["element"]) == term(qm1(tor(5)), 1, -1));
}
