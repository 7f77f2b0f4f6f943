#include <benchmark/benchmark.h>

#include "zeitlin/brackets.hpp"
#include "zeitlin/initial_conditions.hpp"
#include "zeitlin/integrator.hpp"
#include "zeitlin/sun_matrix.hpp"

namespace {

using namespace zeitlin;

ModeField field_for(const benchmark::State& state) {
  return smooth_initial_condition(ModeLattice(static_cast<int>(state.range(0))), 3.0, 1);
}

void BM_GalerkinRhs(benchmark::State& state) {
  const ModeField w = field_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(galerkin_rhs(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GalerkinRhs)->Arg(11)->Arg(25)->Arg(31)->Arg(63)->Complexity();

void BM_SineBracketRhs(benchmark::State& state) {
  const ModeField w = field_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(sine_bracket_rhs(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SineBracketRhs)->Arg(11)->Arg(25)->Arg(31)->Arg(63)->Complexity();

// The matrix path is an oracle, not a production kernel; it is here to show
// how far it is from the direct sum.
void BM_CommutatorRhs(benchmark::State& state) {
  const ModeField w = field_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_rhs(w));
}
BENCHMARK(BM_CommutatorRhs)->Arg(11)->Arg(25);

void BM_TraceCasimirs(benchmark::State& state) {
  const SuMatrix m = field_to_matrix(field_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(trace_casimirs(m, 5));
}
BENCHMARK(BM_TraceCasimirs)->Arg(11)->Arg(25);

void BM_Rk4StepSine(benchmark::State& state) {
  ModeField w = field_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(w = rk4_step(w, 1e-4, SchemeKind::SineBracket));
}
BENCHMARK(BM_Rk4StepSine)->Arg(25);

}  // namespace
BENCHMARK_MAIN();
