#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace qheis::cli;

  CLI::App app{"Exact computation in the q-deformed Heisenberg algebra AB - qBA = I"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "text";
  std::string out_path;
  app.add_option("--p", cfg.p, "Torsion order (integer >= 2) or 'generic'")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--defn2-literal", cfg.defn2_literal, "Exclude C^n with n >= 2 and n-1 divisible by p");
  app.add_flag("--exclude-central-c-powers", cfg.exclude_central_c_powers, "Exclude C^n with n divisible by p");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--out", out_path, "Also write the JSON payload to this path");

  int code = kExitOk;
  std::string e1, e2;

  auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an expression");
  normalize->add_option("expr", e1)->required();
  normalize->callback([&] { code = cmd_normalize(cfg, e1, std::cout, std::cerr); });

  auto* comm = app.add_subcommand("comm", "Commutator of two expressions");
  comm->add_option("x", e1)->required();
  comm->add_option("y", e2)->required();
  comm->callback([&] { code = cmd_comm(cfg, e1, e2, std::cout, std::cerr); });

  auto* member = app.add_subcommand("member", "Decide whether an expression is a Lie polynomial in A, B");
  member->add_option("expr", e1)->required();
  member->callback([&] { code = cmd_member(cfg, e1, std::cout, std::cerr); });

  auto* construct = app.add_subcommand("construct", "Bracket expression producing a Lie basis monomial");
  construct->add_option("monomial", e1)->required();
  construct->callback([&] { code = cmd_construct(cfg, e1, std::cout, std::cerr); });

  ClosureArgs closure_args;
  auto* closure = app.add_subcommand("closure", "Bracket closure of {A, B} projected to a window");
  closure->add_option("--depth", closure_args.depth)->capture_default_str();
  closure->add_option("--kmax", closure_args.kmax)->capture_default_str();
  closure->add_option("--dmax", closure_args.dmax)->capture_default_str();
  closure->add_option("--threads", closure_args.threads)->capture_default_str();
  closure->callback([&] { code = cmd_closure(cfg, closure_args, std::cout, std::cerr); });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any violation");
  verify->add_option("suite", verify_args.suite)->check(CLI::IsMember(verify_suites()))->capture_default_str();
  verify->add_option("--kmax", verify_args.kmax, "Override the suite's C-exponent bound");
  verify->add_option("--dmax", verify_args.dmax, "Override the suite's A/B-exponent bound");
  verify->add_option("--lmax", verify_args.lmax, "Override the suite's power bound");
  verify->add_option("--depth", verify_args.depth, "Override the closure depth");
  verify->add_option("--pairs", verify_args.pairs, "Override the number of random pairs");
  verify->callback([&] { code = cmd_verify(cfg, verify_args, std::cout, std::cerr); });

  TablesArgs tables_args;
  auto* tables = app.add_subcommand("tables", "Structure constants for products of basis monomials");
  tables->add_option("--kmax", tables_args.kmax)->capture_default_str();
  tables->add_option("--lmax", tables_args.lmax)->capture_default_str();
  tables->callback([&] { code = cmd_tables(cfg, tables_args, std::cout, std::cerr); });

  app.parse_complete_callback([&] {
    cfg.format = format == "json" ? Format::Json : Format::Text;
    if (!out_path.empty()) cfg.out = out_path;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return code;
}
