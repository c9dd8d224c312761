// Acceptance suite: end-to-end checks of the library's headline results,
// one printed line per criterion. Everything is exact unless a digit
// count is stated. The CLI binary path is taken from argv[1] for the
// process-level determinism checks.

#define DOCTEST_CONFIG_DISABLE  // test_support.hpp is shared with doctest TUs

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include <aurea/decimal.hpp>
#include <aurea/denest.hpp>
#include <aurea/matrix.hpp>
#include <aurea/solver.hpp>

#include "commands.hpp"
#include "test_support.hpp"

using namespace aurea;
using aurea::testing::Biquad;
using aurea::testing::Rng;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    notes.push_back(what);
    throw std::runtime_error(what);
  }
}

void criterion(int index, const std::string& title,
               const std::function<void()>& body) {
  bool ok = true;
  std::string detail;
  try {
    body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index,
              title.c_str());
  if (!ok) {
    std::printf("       %s\n", detail.c_str());
    ++failures;
  }
}

const QuadExt kRho(Rational(1, 2), Rational(1, 2), Int(5));
const QuadExt kRhoSq(Rational(3, 2), Rational(1, 2), Int(5));
const QuadExt kConjSq(Rational(3, 2), Rational(-1, 2), Int(5));

struct ProcResult {
  int exit_code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  q += "'";
  return q;
}

ProcResult run_cli(const std::string& cli,
                   const std::vector<std::string>& args) {
  std::string cmd = shell_quote(cli);
  for (const std::string& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  expect(pipe != nullptr, "failed to launch " + cmd);
  ProcResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool trace_has(const SolutionSet& s, const std::string& needle) {
  for (const TraceStep& step : s.trace)
    if (step.lhs.find(needle) != std::string::npos ||
        step.rhs.find(needle) != std::string::npos)
      return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  criterion(1, "charpoly(path_adjacency(4)) = x^4 - 3x^2 + 1, exact", [] {
    const Matrix a = Matrix::path_adjacency(4);
    const Polynomial expected({1, 0, -3, 0, 1});
    expect(a.charpoly() == expected, "Faddeev-LeVerrier value wrong");
    expect(testing::charpoly_cofactor(a) == expected,
           "cofactor oracle disagrees");
  });

  criterion(2,
            "perfect-square route yields the four unnested roots with the "
            "squared-binomial step in the trace",
            [] {
    const SolutionSet s =
        solve_biquadratic_perfect_square(Rational(-3), Rational(1));
    expect(s.roots.size() == 4, "expected four roots");
    for (const Radical& r : s.roots)
      expect(r.tier() == 1, "root not tier-1: " + r.str());
    const std::vector<Radical> expected{
        Radical(kRho), Radical(-kRho),
        Radical(QuadExt(Rational(-1, 2), Rational(1, 2), Int(5))),
        Radical(QuadExt(Rational(1, 2), Rational(-1, 2), Int(5)))};
    expect(testing::multiset_equal_radicals(s.roots, expected),
           "root multiset mismatch");
    expect(trace_has(s, "(x^2 - 1)^2 = x^2"), "missing perfect-square step");
    expect(trace_has(s, "x^2 - x - 1 = 0"), "missing first quadratic");
    expect(trace_has(s, "x^2 + x - 1 = 0"), "missing second quadratic");
  });

  criterion(3,
            "substitution route yields the four nested roots, undenested, "
            "with both substituted roots in the trace",
            [] {
    const SolutionSet s =
        solve_biquadratic_substitution(Rational(-3), Rational(1));
    expect(s.roots.size() == 4, "expected four roots");
    expect(s.roots[0] == Radical::sqrt_of(kRhoSq), "root 1 wrong");
    expect(s.roots[1] == Radical::sqrt_of(kRhoSq, -1), "root 2 wrong");
    expect(s.roots[2] == Radical::sqrt_of(kConjSq), "root 3 wrong");
    expect(s.roots[3] == Radical::sqrt_of(kConjSq, -1), "root 4 wrong");
    for (const Radical& r : s.roots)
      expect(r.tier() == 2, "root was denested: " + r.str());
    expect(trace_has(s, "(3 + sqrt(5))/2"), "missing substituted root");
    expect(trace_has(s, "(3 - sqrt(5))/2"), "missing substituted root");
  });

  criterion(4,
            "cross-representation identity: 4 equal pairs among the 16 "
            "cross comparisons, and sqrt((3+sqrt(5))/2) denests to the "
            "golden ratio",
            [] {
    const SolutionSet ps =
        solve_biquadratic_perfect_square(Rational(-3), Rational(1));
    const SolutionSet sub =
        solve_biquadratic_substitution(Rational(-3), Rational(1));
    int trues = 0;
    for (const Radical& a : sub.roots) {
      int row = 0;
      for (const Radical& b : ps.roots)
        if (equal(a, b)) ++row;
      expect(row == 1, "a nested root matched " + std::to_string(row) +
                           " unnested roots");
      trues += row;
    }
    expect(trues == 4, "expected exactly 4 true comparisons");
    // the displayed correspondence, pair by pair
    expect(equal(Radical::sqrt_of(kRhoSq), Radical(kRho)), "pair 1");
    expect(equal(Radical::sqrt_of(kRhoSq, -1), Radical(-kRho)), "pair 2");
    expect(equal(Radical::sqrt_of(kConjSq),
                 Radical(QuadExt(Rational(-1, 2), Rational(1, 2), Int(5)))),
           "pair 3");
    expect(equal(Radical::sqrt_of(kConjSq, -1),
                 Radical(QuadExt(Rational(1, 2), Rational(-1, 2), Int(5)))),
           "pair 4");
    const DenestResult dn = denest_sqrt(kRhoSq);
    expect(dn.status == DenestStatus::denested, "denesting failed");
    expect(dn.value == kRho, "denested value is not the golden ratio");
  });

  criterion(5, "to_decimal((sqrt(5)-1)/2, 7) = \"0.6180339\" byte-exact",
            [] {
    const Radical reciprocal(
        QuadExt(Rational(-1, 2), Rational(1, 2), Int(5)));
    const std::string s = to_decimal(reciprocal, 7);
    expect(s == "0.6180339", "got \"" + s + "\"");
  });

  criterion(6,
            "golden powers match the Lucas/Fibonacci ladder and every "
            "n-th root reproduces 30 digits of the golden ratio",
            [] {
    // recurrence oracle: L(1)=1, L(2)=3; F(1)=F(2)=1
    std::vector<long> lucas{0, 1, 3}, fib{0, 1, 1};
    for (int n = 3; n <= 6; ++n) {
      lucas.push_back(lucas[n - 1] + lucas[n - 2]);
      fib.push_back(fib[n - 1] + fib[n - 2]);
    }
    const long expected_lucas[] = {1, 3, 4, 7, 11, 18};
    const long expected_fib[] = {1, 1, 2, 3, 5, 8};
    for (int n = 1; n <= 6; ++n) {
      expect(lucas[n] == expected_lucas[n - 1], "Lucas oracle mismatch");
      expect(fib[n] == expected_fib[n - 1], "Fibonacci oracle mismatch");
      const QuadExt power = golden_power(static_cast<unsigned>(n));
      expect(power == QuadExt(Rational(lucas[n], 2), Rational(fib[n], 2),
                              Int(5)),
             "golden_power(" + std::to_string(n) + ") mismatch");
    }
    const std::string reference = to_decimal(Radical(kRho), 30);
    for (unsigned n = 1; n <= 6; ++n) {
      const std::string got = nth_root_representation(n).decimal(30);
      expect(got == reference,
             "n=" + std::to_string(n) + ": " + got + " != " + reference);
    }
  });

  criterion(7,
            "property suite: 500 square-q biquadratics solve both ways "
            "with equal root multisets, plus 500 real biquadratics under "
            "substitution, every root exact",
            [] {
    Rng rng(0xACCE5501);
    for (int i = 0; i < 500; ++i) {
      const Biquad bi = testing::random_square_biquadratic(rng);
      const Polynomial source(
          {bi.q, Rational(0), bi.p, Rational(0), Rational(1)});
      const SolutionSet ps = solve_biquadratic_perfect_square(bi.p, bi.q);
      const SolutionSet sub = solve_biquadratic_substitution(bi.p, bi.q);
      for (const Radical& r : ps.roots)
        expect(is_root(source, r), "perfect-square root fails is_root");
      for (const Radical& r : sub.roots)
        expect(is_root(source, r), "substitution root fails is_root");
      expect(testing::multiset_equal_radicals(ps.roots, sub.roots),
             "root multisets differ for p=" + bi.p.str() +
                 ", q=" + bi.q.str());
    }
    Rng rng2(0xACCE5502);
    for (int i = 0; i < 500; ++i) {
      const Biquad bi = testing::random_real_biquadratic(rng2);
      const SolutionSet s = solve_biquadratic_substitution(bi.p, bi.q);
      expect(!s.roots.empty(), "no real roots produced");
      for (const Radical& r : s.roots)
        expect(is_root(s.source, r), "substitution root fails is_root");
    }
  });

  criterion(8,
            "Faddeev-LeVerrier equals cofactor expansion on 200 random "
            "rational matrices up to 5x5",
            [] {
    Rng rng(0xACCE5503);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
      const Matrix m = testing::random_matrix(rng, n);
      expect(m.charpoly() == testing::charpoly_cofactor(m),
             "charpoly mismatch on a random matrix");
    }
  });

  criterion(9,
            "CLI determinism: byte-identical reruns of the three flagship "
            "invocations, and JSON roots re-parse to equal values",
            [&] {
    expect(!cli_path.empty(), "pass the CLI binary path as argv[1]");
    const std::vector<std::vector<std::string>> invocations{
        {"solve", "x^4-3x^2+1=0", "--method", "substitution"},
        {"eig", "0,1,0,0; 1,0,1,0; 0,1,0,1; 0,0,1,0"},
        {"equal", "sqrt((3+sqrt(5))/2)", "(1+sqrt(5))/2"}};
    for (const auto& args : invocations) {
      const ProcResult first = run_cli(cli_path, args);
      const ProcResult second = run_cli(cli_path, args);
      expect(first.exit_code == 0, "nonzero exit for " + args[0]);
      expect(second.exit_code == 0, "nonzero exit on rerun of " + args[0]);
      expect(first.out == second.out, "output differs across runs");
      expect(!first.out.empty(), "empty output");
    }
    expect(run_cli(cli_path, invocations[2]).out == "true\n",
           "equality check did not print true");

    const ProcResult json_run = run_cli(
        cli_path, {"solve", "x^4-3x^2+1=0", "--method", "substitution",
                   "--format", "json"});
    expect(json_run.exit_code == 0, "json run failed");
    const nlohmann::json j = nlohmann::json::parse(json_run.out);
    std::vector<Radical> reparsed;
    for (const auto& r : j.at("roots"))
      reparsed.push_back(aurea::cli::radical_from_json(r));
    const SolutionSet direct =
        solve_biquadratic_substitution(Rational(-3), Rational(1));
    expect(testing::multiset_equal_radicals(reparsed, direct.roots),
           "re-parsed JSON roots are not equal to the originals");
  });

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
