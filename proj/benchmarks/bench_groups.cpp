#include <benchmark/benchmark.h>

#include "versorlab/catalog.hpp"
#include "versorlab/induction.hpp"
#include "versorlab/versor_group.hpp"

using namespace versorlab;

namespace {

void BM_PinClosure(benchmark::State& state, const char* name) {
  const RootSystem rs = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(generate_pin(rs));
}
BENCHMARK_CAPTURE(BM_PinClosure, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PinClosure, H3, "H3")->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State& state, const char* name) {
  const VersorGroup g = generate_pin(catalog(name));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g));
}
BENCHMARK_CAPTURE(BM_ConjugacyClasses, A3, "A3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConjugacyClasses, H3, "H3")->Unit(benchmark::kMillisecond);

void BM_SymmetrySweep(benchmark::State& state, const char* name) {
  const InducedRootSystem4D induced = induce_4d(generate_spin(catalog(name)));
  SymmetrySweepOptions opts;
  opts.sampled_pairs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spinorial_automorphisms(induced, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_SymmetrySweep, H3, "H3")->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Induction(benchmark::State& state, const char* name) {
  const VersorGroup g = generate_spin(catalog(name));
  for (auto _ : state) benchmark::DoNotOptimize(induce_4d(g));
}
BENCHMARK_CAPTURE(BM_Induction, H3, "H3")->Unit(benchmark::kMillisecond);

}  // namespace
