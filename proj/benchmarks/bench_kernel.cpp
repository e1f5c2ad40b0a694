#include <benchmark/benchmark.h>

#include <random>

#include "versorlab/catalog.hpp"
#include "versorlab/multivector.hpp"

using namespace versorlab;

namespace {

Multivector dense(Signature sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m(sig);
  for (BladeMask b = 0; b < sig.blade_count(); ++b) m.set(b, u(rng));
  return m;
}

void BM_GeometricProduct(benchmark::State& state) {
  const Signature sig(static_cast<int>(state.range(0)), 0);
  const Multivector a = dense(sig, 1), b = dense(sig, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct)->Arg(3)->Arg(4)->Arg(8);

void BM_VectorProduct(benchmark::State& state) {
  const Signature sig(static_cast<int>(state.range(0)), 0);
  const Multivector a = grade_project(dense(sig, 1), 1), b = grade_project(dense(sig, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_VectorProduct)->Arg(3)->Arg(8);

void BM_RootClosure(benchmark::State& state, const char* name) {
  const auto simple = catalog_simple_roots(name);
  for (auto _ : state) benchmark::DoNotOptimize(close_roots(simple));
}
BENCHMARK_CAPTURE(BM_RootClosure, H3, "H3");
BENCHMARK_CAPTURE(BM_RootClosure, H4, "H4");
BENCHMARK_CAPTURE(BM_RootClosure, E8, "E8")->Unit(benchmark::kMillisecond);

}  // namespace
