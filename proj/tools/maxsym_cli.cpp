#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maxsym/cli/commands.hpp"

namespace cli = maxsym::cli;

namespace {

struct Options {
  int order = 2;
  std::string var = "q";
  std::string format = "text";
  bool force = false;
  std::string suite = "all";
  int max_order = 8;
  bool no_timing = false;
  std::string u = "exp";
  std::string v;
  std::optional<double> x0;
  std::string interval = "0,1";
  bool check = false;
  std::string q = "const:0";
  std::string y = "poly:0,1";
  int points = 20;
  int k = 0;
  double x = 0.5;
  double lambda = 1.0;
  std::string json_out;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxsym: maximally symmetric linear ODEs and their solution bases"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "print the order-n maximally symmetric equation");
  gen->add_option("-n,--order", o.order, "equation order")->required();
  gen->add_option("--var", o.var, "coefficient variable: q or r")->check(CLI::IsMember({"q", "r"}));
  gen->add_option("--format", o.format, "text, latex or json");
  gen->add_flag("--force", o.force, "allow orders above the soft cap");

  auto* ver = app.add_subcommand("verify", "run identity and numeric checks");
  ver->add_option("--suite", o.suite, "recurrence, operators, transform, solutions, a15 or all");
  ver->add_option("--max-order", o.max_order, "largest order checked");
  ver->add_option("--format", o.format, "text or json");
  ver->add_flag("--no-timing", o.no_timing, "omit timings so output is reproducible");

  auto* bas = app.add_subcommand("basis", "build a solution basis from u (and v)");
  bas->add_option("-n,--order", o.order, "equation order")->required();
  bas->add_option("--u", o.u, "function spec for u");
  bas->add_option("--v", o.v, "second solution of y'' + q y = 0");
  bas->add_option("--x0", o.x0, "anchor of the integral in the u-only basis");
  bas->add_option("--interval", o.interval, "a,b");
  bas->add_flag("--check", o.check, "evaluate residuals and Wronskian");

  auto* res = app.add_subcommand("residual", "residual of a candidate solution");
  res->add_option("-n,--order", o.order, "equation order")->required();
  res->add_option("--q", o.q, "function spec for q");
  res->add_option("--y", o.y, "function spec for the candidate");
  res->add_option("--interval", o.interval, "a,b");
  res->add_option("--points", o.points, "sample count");

  auto* tr = app.add_subcommand("transform", "map a canonical solution through the equivalence");
  tr->add_option("-n,--order", o.order, "equation order")->required();
  tr->add_option("--u", o.u, "function spec for u");
  tr->add_option("--k", o.k, "canonical solution index, z^k");
  tr->add_option("--x", o.x, "evaluation point");
  tr->add_option("--lambda", o.lambda, "scale of u");
  tr->add_option("--x0", o.x0, "base point of h");
  tr->add_option("--interval", o.interval, "a,b");

  for (auto* sub : {gen, ver, bas, res, tr})
    sub->add_option("--json-out", o.json_out, "also write JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  cli::CommandRequest req;
  if (!o.json_out.empty()) req.json_out = o.json_out;
  try {
    if (gen->parsed()) {
      req.command = cli::GenerateRequest{o.order, o.var, cli::parse_format(o.format), o.force};
    } else if (ver->parsed()) {
      req.command = cli::VerifyRequest{cli::parse_suite(o.suite), o.max_order,
                                       cli::parse_format(o.format), !o.no_timing};
    } else if (bas->parsed()) {
      cli::BasisRequest b;
      b.order = o.order;
      b.u = o.u;
      if (!o.v.empty()) b.v = o.v;
      b.x0 = o.x0;
      b.interval = cli::parse_interval(o.interval);
      b.check = o.check;
      req.command = b;
    } else if (res->parsed()) {
      req.command = cli::ResidualRequest{o.order, o.q, o.y, cli::parse_interval(o.interval), o.points};
    } else {
      req.command = cli::TransformRequest{o.order, o.u, o.k, o.x, o.lambda, o.x0,
                                          cli::parse_interval(o.interval)};
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return cli::dispatch(req, std::cout, std::cerr);
}
