// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hyponorm/kernels.hpp"
#include "hyponorm/matrices.hpp"
#include "hyponorm/positivity.hpp"

using namespace hyponorm;

namespace {

const FactorableGenerators& odd() {
    static const FactorableGenerators g = [] {
        FactorableGenerators gen(WeightSequence::linear(2, 1));
        gen.prepare(2050);
        return gen;
    }();
    return g;
}

void build_q(benchmark::State& state, Execution exec) {
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finite_section(odd(), MatrixKind::Q, N, exec));
}

void reduce_q(benchmark::State& state, Execution exec) {
    const auto N = static_cast<std::size_t>(state.range(0));
    const auto q = finite_section(odd(), MatrixKind::Q, N);
    const auto z = elimination_multipliers(odd(), N);
    for (auto _ : state) benchmark::DoNotOptimize(congruence(q, z, exec));
}

void minors_q(benchmark::State& state, Execution exec) {
    const auto N = static_cast<std::size_t>(state.range(0));
    const auto q = finite_section(odd(), MatrixKind::Q, N);
    for (auto _ : state) benchmark::DoNotOptimize(leading_minors(q, exec));
}

}  // namespace

BENCHMARK_CAPTURE(build_q, serial, Execution::serial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build_q, parallel, Execution::parallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reduce_q, serial, Execution::serial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reduce_q, parallel, Execution::parallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(minors_q, serial, Execution::serial)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(minors_q, parallel, Execution::parallel)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
