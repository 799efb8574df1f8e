// Engine timing on N(n): the O(n) continuant against dense elimination,
// the factorial oracle and a first-row Laplace expansion.

#include <benchmark/benchmark.h>

#include <pellmat/determinant.hpp>
#include <pellmat/pell.hpp>

using namespace pellmat;

namespace {

void BM_Continuant(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    TridiagSpec spec = build_pell_matrix(n);
    for (auto _ : state) {
        GaussInt d = det_continuant(spec);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Continuant)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096)->Arg(10000)->Complexity();

void BM_Bareiss(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix a = materialize(build_pell_matrix(n));
    for (auto _ : state) {
        GaussInt d = det_bareiss(a);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Bareiss)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void BM_PermutationOracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix a = materialize(build_pell_matrix(n));
    for (auto _ : state) {
        GaussInt d = det_permutation(a);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_PermutationOracle)->Arg(6)->Arg(7)->Arg(8);

void BM_LaplaceFirstRow(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DenseMatrix a = materialize(build_pell_matrix(n));
    IndexSet rows({1});
    for (auto _ : state) {
        RowExpansion e = laplace_expand(a, rows);
        benchmark::DoNotOptimize(e.total);
    }
}
BENCHMARK(BM_LaplaceFirstRow)->Arg(8)->Arg(12)->Arg(16);

void BM_PellRecurrence(benchmark::State& state) {
    const auto n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        mpz_class p = pell(n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PellRecurrence)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
