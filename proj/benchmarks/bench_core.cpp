#include <benchmark/benchmark.h>

#include <aurea/decimal.hpp>
#include <aurea/denest.hpp>
#include <aurea/matrix.hpp>
#include <aurea/solver.hpp>

using namespace aurea;

namespace {

const QuadExt kRhoSq(Rational(3, 2), Rational(1, 2), Int(5));

void BM_golden_power(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(golden_power(n));
  }
}
BENCHMARK(BM_golden_power)->Arg(16)->Arg(64);

void BM_charpoly_path(benchmark::State& state) {
  const Matrix m =
      Matrix::path_adjacency(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.charpoly());
  }
}
BENCHMARK(BM_charpoly_path)->Arg(4)->Arg(8)->Arg(12);

void BM_det_path(benchmark::State& state) {
  const Matrix m =
      Matrix::path_adjacency(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.det());
  }
}
BENCHMARK(BM_det_path)->Arg(4)->Arg(12);

void BM_solve_perfect_square(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_biquadratic_perfect_square(Rational(-3), Rational(1)));
  }
}
BENCHMARK(BM_solve_perfect_square);

void BM_solve_substitution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_biquadratic_substitution(Rational(-3), Rational(1)));
  }
}
BENCHMARK(BM_solve_substitution);

void BM_denest(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(denest_sqrt(kRhoSq));
  }
}
BENCHMARK(BM_denest);

void BM_to_decimal(benchmark::State& state) {
  const Radical nested = Radical::sqrt_of(kRhoSq);
  const unsigned digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_decimal(nested, digits));
  }
}
BENCHMARK(BM_to_decimal)->Arg(30)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
