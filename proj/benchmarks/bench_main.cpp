#include <random>

#include <benchmark/benchmark.h>

#include "qheis/algebra.hpp"
#include "qheis/closure.hpp"
#include "qheis/free_algebra.hpp"
#include "qheis/torsion.hpp"
#include "qheis/verify.hpp"

using namespace qheis;

namespace {

// range(0) is the torsion order; 0 selects generic q.
const ScalarContext& context_for(long p) { return p == 0 ? ScalarContext::generic() : ScalarContext::torsion(static_cast<int>(p)); }

std::vector<std::pair<Element, Element>> random_pairs(const ScalarContext& ctx, int n, long max_exp) {
  std::mt19937_64 rng(42);
  std::vector<std::pair<Element, Element>> out;
  for (int i = 0; i < n; ++i) {
    Element x = random_element(ctx, rng, max_exp, 4);
    Element y = random_element(ctx, rng, max_exp, 4);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const auto pairs = random_pairs(ctx, 32, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(multiply(x, y));
  }
}
BENCHMARK(BM_Multiply)->Arg(0)->Arg(2)->Arg(3)->Arg(5);

void BM_MultiplyByRewriting(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const auto pairs = random_pairs(ctx, 32, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(multiply_by_rewriting(x, y));
  }
}
BENCHMARK(BM_MultiplyByRewriting)->Arg(0)->Arg(2)->Arg(3)->Arg(5);

void BM_MultiplyFastpath(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const Monomial x{3, -2 * state.range(0)}, y{2, 2 * state.range(0) + 1};
  for (auto _ : state) benchmark::DoNotOptimize(multiply_monomials_fastpath(ctx, x, y));
}
BENCHMARK(BM_MultiplyFastpath)->Arg(2)->Arg(3)->Arg(5);

void BM_MultiplyGeneralSameGrid(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const Monomial x{3, -2 * state.range(0)}, y{2, 2 * state.range(0) + 1};
  for (auto _ : state) benchmark::DoNotOptimize(multiply_monomials(ctx, x, y));
}
BENCHMARK(BM_MultiplyGeneralSameGrid)->Arg(2)->Arg(3)->Arg(5);

void BM_Closure(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lie_closure(ctx, depth, Window{4, 4, 0}));
}
BENCHMARK(BM_Closure)->Args({2, 6})->Args({3, 6})->Args({3, 8})->Unit(benchmark::kMillisecond);

void BM_ScalarMultiplyAdd(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const Scalar a = Scalar(ctx, Rational(3, 7)) * Scalar::q_power(ctx, 2) + Scalar(ctx, 2);
  const Scalar b = (Scalar::q_power(ctx, 1) - Scalar::one(ctx)).inverse() + Scalar(ctx, Rational(-5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a);
}
BENCHMARK(BM_ScalarMultiplyAdd)->Arg(0)->Arg(3)->Arg(7)->Arg(11);

void BM_ScalarInverse(benchmark::State& state) {
  const auto& ctx = context_for(state.range(0));
  const Scalar a = Scalar(ctx, Rational(3, 7)) * Scalar::q_power(ctx, 2) + Scalar(ctx, 2) + Scalar::q_power(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ScalarInverse)->Arg(0)->Arg(3)->Arg(7)->Arg(11);

}  // namespace
BENCHMARK_MAIN();
