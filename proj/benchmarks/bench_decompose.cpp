#include <benchmark/benchmark.h>

#include <bsdecomp/codim4.hpp>
#include <bsdecomp/recursive.hpp>

using namespace bsdecomp;

namespace {

void BM_BettiCi(benchmark::State& state) {
    const std::vector<Int> degrees(state.range(0), 3);
    const DegreeTuple tuple(degrees);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_ci(tuple));
    }
}
BENCHMARK(BM_BettiCi)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_BettiCiSpread(benchmark::State& state) {
    std::vector<Int> degrees;
    for (Int k = 1; k <= state.range(0); ++k) degrees.push_back(k);
    const DegreeTuple tuple(degrees);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_ci(tuple));
    }
}
BENCHMARK(BM_BettiCiSpread)->Arg(8)->Arg(12)->Arg(16);

void BM_DecomposeCodim3(benchmark::State& state) {
    const Diagram d = betti_ci(DegreeTuple{2, 3, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(d));
    }
}
BENCHMARK(BM_DecomposeCodim3);

void BM_DecomposeMassElimination(benchmark::State& state) {
    const Diagram d = betti_ci(DegreeTuple{2, 3, 5, 7});
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(d));
    }
}
BENCHMARK(BM_DecomposeMassElimination);

void BM_DecomposeCodim5(benchmark::State& state) {
    const Diagram d = betti_ci(DegreeTuple{2, 3, 4, 5, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(d));
    }
}
BENCHMARK(BM_DecomposeCodim5);

void BM_RecursiveDecomposition(benchmark::State& state) {
    const DegreeTuple base{2, 3, 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(new_algorithm(base, 13));
    }
}
BENCHMARK(BM_RecursiveDecomposition);

void BM_Codim4ClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(codim4_closed(2, 3, 4, 13));
    }
}
BENCHMARK(BM_Codim4ClosedForm);

void BM_Remainders(benchmark::State& state) {
    const DegreeTuple base{3, 5, 7, 9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(remainders(base));
    }
}
BENCHMARK(BM_Remainders);

}  // namespace

BENCHMARK_MAIN();
