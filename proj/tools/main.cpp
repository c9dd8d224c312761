#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using aurea::cli::Format;
using aurea::cli::Method;
using aurea::cli::Options;
using aurea::cli::Outcome;

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string arg_or_stdin(const std::string& arg) {
  return arg == "-" ? read_stdin() : arg;
}

void add_format_flag(CLI::App* sub, Options& opt) {
  static const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}};
  sub->add_option("--format", opt.format, "Output format (text|json)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aurea: exact solver for quadratic and biquadratic equations over "
      "the rationals, with nested-radical denesting"};
  app.require_subcommand(1);

  Options opt;
  std::string arg1, arg2;
  unsigned n = 2;
  Outcome outcome;

  static const std::map<std::string, Method> methods{
      {"auto", Method::automatic},
      {"perfect-square", Method::perfect_square},
      {"substitution", Method::substitution}};

  auto* solve = app.add_subcommand(
      "solve", "Solve an equation, e.g. \"x^4 - 3x^2 + 1 = 0\"");
  solve->add_option("equation", arg1, "Equation text ('-' reads stdin)")
      ->required();
  solve->add_flag("--trace", opt.trace, "Print the derivation steps");
  solve->add_option("--method", opt.method,
                    "auto|perfect-square|substitution")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  add_format_flag(solve, opt);
  solve->callback(
      [&] { outcome = aurea::cli::run_solve(arg_or_stdin(arg1), opt); });

  auto* charpoly = app.add_subcommand(
      "charpoly", "Characteristic polynomial of a rational matrix");
  charpoly->add_option("matrix", arg1, "Rows split by ';' ('-' reads stdin)")
      ->required();
  add_format_flag(charpoly, opt);
  charpoly->callback(
      [&] { outcome = aurea::cli::run_charpoly(arg_or_stdin(arg1), opt); });

  auto* eig = app.add_subcommand(
      "eig", "Exact eigenvalues: charpoly, then solve");
  eig->add_option("matrix", arg1, "Rows split by ';' ('-' reads stdin)")
      ->required();
  eig->add_flag("--trace", opt.trace, "Print the derivation steps");
  eig->add_option("--method", opt.method, "auto|perfect-square|substitution")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  add_format_flag(eig, opt);
  eig->callback(
      [&] { outcome = aurea::cli::run_eig(arg_or_stdin(arg1), opt); });

  auto* denest = app.add_subcommand(
      "denest", "Rewrite sqrt(a + b*sqrt(d)) without nesting when possible");
  denest->add_option("expression", arg1, "Radical ('-' reads stdin)")
      ->required();
  add_format_flag(denest, opt);
  denest->callback(
      [&] { outcome = aurea::cli::run_denest(arg_or_stdin(arg1), opt); });

  auto* equal = app.add_subcommand(
      "equal", "Decide exact equality of two radical expressions");
  equal->add_option("lhs", arg1, "First radical")->required();
  equal->add_option("rhs", arg2, "Second radical")->required();
  add_format_flag(equal, opt);
  equal->callback([&] { outcome = aurea::cli::run_equal(arg1, arg2, opt); });

  auto* golden = app.add_subcommand(
      "golden", "The golden ratio as the n-th root of its n-th power");
  golden->add_option("--n", n, "Exponent (1..64)")->required();
  golden->add_option("--digits", opt.digits, "Verification digits (default 10)")
      ->check(CLI::PositiveNumber);
  add_format_flag(golden, opt);
  golden->callback([&] { outcome = aurea::cli::run_golden(n, opt); });

  auto* eval = app.add_subcommand(
      "eval", "Exact decimal expansion of a radical expression");
  eval->add_option("expression", arg1, "Radical ('-' reads stdin)")
      ->required();
  eval->add_option("--digits", opt.digits, "Fractional digits (default 10)")
      ->check(CLI::PositiveNumber);
  add_format_flag(eval, opt);
  eval->callback(
      [&] { outcome = aurea::cli::run_eval(arg_or_stdin(arg1), opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error (usage): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }

  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
