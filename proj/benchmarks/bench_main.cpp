#include <benchmark/benchmark.h>

#include "covg/arrangement.hpp"
#include "covg/equivariant.hpp"
#include "covg/fixtures.hpp"
#include "covg/vg.hpp"

using namespace covg;

static void BM_AxiomCheckBraid(benchmark::State& state) {
  const auto m = braid_com(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(m.covectors()).ok());
  state.SetLabel(std::to_string(m.size()) + " covectors");
}
BENCHMARK(BM_AxiomCheckBraid)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBraid(benchmark::State& state) {
  const auto a = braid_arrangement(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covectors(a).size());
}
BENCHMARK(BM_EnumerateBraid)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_Circuits(benchmark::State& state) {
  const auto m = braid_com(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuits(m).size());
}
BENCHMARK(BM_Circuits)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

template <bool Rational>
static void BM_BigHilbertBraid(benchmark::State& state) {
  const auto locus = big_locus(braid_com(static_cast<std::size_t>(state.range(0))));
  const FieldSpec field = Rational ? FieldSpec{} : FieldSpec::parse("fp:1000003");
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(locus, field).total());
}
BENCHMARK(BM_BigHilbertBraid<true>)->Name("BM_BigHilbertBraid/rational")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BigHilbertBraid<false>)->Name("BM_BigHilbertBraid/fp")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_HilbertViaNbc(benchmark::State& state) {
  const auto m = braid_com(static_cast<std::size_t>(state.range(0)));
  const auto order = TotalOrder::natural(m.ground_size());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_via_nbc(m, order).big.total());
}
BENCHMARK(BM_HilbertViaNbc)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheoremBig(benchmark::State& state) {
  const auto m = braid_com(static_cast<std::size_t>(state.range(0)));
  const auto order = TotalOrder::natural(m.ground_size());
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_big(m, order).pass);
}
BENCHMARK(BM_VerifyTheoremBig)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_GradedCharacter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto locus = big_locus(braid_com(n));
  const auto g = braid_symmetric_group(n);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graded_character(locus, g, {}, threads).degrees());
}
BENCHMARK(BM_GradedCharacter)->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_KostantHilbert(benchmark::State& state) {
  const auto locus = kostant_locus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(locus).total());
}
BENCHMARK(BM_KostantHilbert)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
