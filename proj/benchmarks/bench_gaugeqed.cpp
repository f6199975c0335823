#include <gaugeqed/dicke.hpp>
#include <gaugeqed/experiments.hpp>
#include <gaugeqed/particle1d.hpp>
#include <gaugeqed/rabi.hpp>

#include <benchmark/benchmark.h>

using namespace gaugeqed;

namespace {

void BM_BuildDipole(benchmark::State& state) {
    const auto p = RabiParams::from_detuning(0.5, 0.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_H_D(p));
}
BENCHMARK(BM_BuildDipole)->Arg(40)->Arg(160);

void BM_BuildCoulombClosedForm(benchmark::State& state) {
    const auto p = RabiParams::from_detuning(0.5, 0.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_H_C_correct(p));
}
BENCHMARK(BM_BuildCoulombClosedForm)->Arg(40)->Arg(160);

void BM_BuildCoulombConjugation(benchmark::State& state) {
    const auto p = RabiParams::from_detuning(0.5, 0.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_H_C_correct(p, CoulombMethod::conjugation));
}
BENCHMARK(BM_BuildCoulombConjugation)->Arg(40)->Arg(160);

void BM_Eigenvalues(benchmark::State& state) {
    const auto h = build_H_C_correct(RabiParams::from_detuning(0.5, 0.0, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h, {false}));
    state.SetComplexityN(h.dim());
}
BENCHMARK(BM_Eigenvalues)->Arg(40)->Arg(80)->Arg(160)->Arg(320)->Complexity(benchmark::oNCubed);

void BM_DickeCorrect(benchmark::State& state) {
    const DickeParams d{static_cast<int>(state.range(0)), RabiParams::from_detuning(0.4, 0.0, 40)};
    for (auto _ : state) benchmark::DoNotOptimize(build_dicke_correct(d, DickeMethod::closed_form));
}
BENCHMARK(BM_DickeCorrect)->Arg(2)->Arg(8);

void BM_ConvergePoint(benchmark::State& state) {
    SweepSpec spec;
    const auto model = ModelSpec::parse("Ccorr");
    for (auto _ : state) benchmark::DoNotOptimize(converge_point(model, spec, 1.0));
}
BENCHMARK(BM_ConvergePoint)->Unit(benchmark::kMillisecond);

void BM_SolveDoubleWell(benchmark::State& state) {
    const auto model = ParticleModel::double_well(2.0, 0.5, 1.0, Grid{-6.0, 6.0, 801}, 50);
    SolveOptions options;
    options.refinement_check = false;
    for (auto _ : state) benchmark::DoNotOptimize(solve_particle(model, options));
}
BENCHMARK(BM_SolveDoubleWell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
