#include "solvable/darboux.hpp"
#include "solvable/numeric/samplers.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace solvable;
using namespace solvable::numeric;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

const ModelSystem& jacobi() {
    static const ModelSystem s = ModelSystem::make(ModelId::J, {Rational(3, 2), Rational(5, 2)});
    return s;
}

void BM_Integrate(benchmark::State& st) {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x); };
    for (auto _ : st) benchmark::DoNotOptimize(integrate(f, -INFINITY, INFINITY, exec_of(st)).value);
    label(st);
}

void BM_InnerProduct(benchmark::State& st) {
    const auto a = level_wave(jacobi(), 4), b = level_wave(jacobi(), 4);
    for (auto _ : st) benchmark::DoNotOptimize(inner_product(a, b, exec_of(st)).value);
    label(st);
}

void BM_Sample(benchmark::State& st) {
    const auto w = level_wave(jacobi(), 6);
    const auto xs = grid_points(default_grid(jacobi(), 1 << 16));
    for (auto _ : st) benchmark::DoNotOptimize(sample(w, xs, exec_of(st)).data());
    label(st);
}

void BM_FdResidual(benchmark::State& st) {
    const auto h = ModelSystem::make(ModelId::H, {});
    const auto ka = krein_adler(h, {1, 2});
    const auto w = deformed_wave(ka.system, ka.system.state(3));
    const PotentialFn U(h, ka.system.potential());
    for (auto _ : st) benchmark::DoNotOptimize(fd_schrodinger_residual(U, w, 6.0, -6, 6, 1e-4, exec_of(st)));
    label(st);
}

}  // namespace

BENCHMARK(BM_Integrate)->Arg(0)->Arg(1);
BENCHMARK(BM_InnerProduct)->Arg(0)->Arg(1);
BENCHMARK(BM_Sample)->Arg(0)->Arg(1);
BENCHMARK(BM_FdResidual)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
