#include <benchmark/benchmark.h>

#include "cotwist/algebras.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/sampling.hpp"
#include "cotwist/segre.hpp"
#include "cotwist/truncated.hpp"

using namespace cotwist;

namespace {

UnitSampling spec() { return UnitSampling{{"q", "r", "s"}, 3, 7}; }

void BM_Evaluate(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto mu = random_cocycle(rng, rank, spec());
  const auto x = random_vector(rng, rank, 6);
  const auto y = random_vector(rng, rank, 6);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(mu, x, y));
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(4)->Arg(8);

void BM_Multiply(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto a = TwistedMonoidAlgebra(random_cocycle(rng, rank, spec()), default_generator_names(rank));
  const auto x = random_element(rng, rank, 4, 8, spec());
  const auto y = random_element(rng, rank, 4, 8, spec());
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, x, y));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_VerifyCocycleEquation(benchmark::State& state) {
  Rng rng(3);
  const auto mu = TruncatedCocycle::truncate(random_cocycle(rng, 2, spec()), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cocycle_equation(mu));
}
BENCHMARK(BM_VerifyCocycleEquation)->Arg(4)->Arg(6)->Arg(8);

void BM_VerifyHomomorphism(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const auto s = build_quantum_segre(n, n, random_cocycle(rng, 2 * n + 2, spec()));
  for (auto _ : state) benchmark::DoNotOptimize(verify_homomorphism(s.homomorphism(), 100, 1));
}
BENCHMARK(BM_VerifyHomomorphism)->Arg(1)->Arg(2)->Arg(3);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  const auto s = build_quantum_segre(n, n, random_cocycle(rng, 2 * n + 2, spec()));
  const Assignment ones{{"q", Rational(1)}, {"r", Rational(1)}, {"s", Rational(1)}};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(s, 2, ones));
}
BENCHMARK(BM_KernelBasis)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
