// Micro benchmarks for the hot paths: the Cholesky log-determinant, a
// single oracle evaluation, the two-phase selection, and the exhaustive
// removal adversary.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "resmax/adversary.hpp"
#include "resmax/dense_matrix.hpp"
#include "resmax/functions.hpp"
#include "resmax/rng.hpp"
#include "resmax/solvers.hpp"
#include "resmax/subset.hpp"

using namespace resmax;

namespace {

DenseMatrix make_spd(int dim, uint64_t seed) {
    Rng rng(seed);
    DenseMatrix factor(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            factor.at(i, j) = rng.next_normal();
        }
    }
    DenseMatrix spd(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = 0.0;
            for (int k = 0; k < dim; ++k) {
                sum += factor.at(i, k) * factor.at(j, k);
            }
            spd.at(i, j) = sum;
            spd.at(j, i) = sum;
        }
    }
    spd.add_identity();
    return spd;
}

void BM_CholeskyLogdet(benchmark::State& state) {
    DenseMatrix spd = make_spd(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cholesky_logdet(spd));
    }
}
BENCHMARK(BM_CholeskyLogdet)->Arg(5)->Arg(20)->Arg(50);

void BM_LogDetEvaluate(benchmark::State& state) {
    LogDetFunction f =
        random_psd_instance(12, static_cast<int>(state.range(0)), 11);
    Subset probe({0, 2, 4, 6, 8}, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.evaluate(probe));
    }
}
BENCHMARK(BM_LogDetEvaluate)->Arg(5)->Arg(20);

void BM_ResilientGreedy(benchmark::State& state) {
    LogDetFunction f =
        random_psd_instance(static_cast<int>(state.range(0)), 20, 3);
    ProblemInstance instance(f, 7, 2);
    for (auto _ : state) {
        SolveResult result = resilient_greedy(instance);
        benchmark::DoNotOptimize(result.residual_value);
    }
}
BENCHMARK(BM_ResilientGreedy)->Arg(10)->Arg(15);

void BM_ExactRemoval(benchmark::State& state) {
    LogDetFunction f = random_psd_instance(12, 20, 5);
    Subset target = Subset::full(12);
    const int beta = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_removal(f, target, beta).residual_value);
    }
}
BENCHMARK(BM_ExactRemoval)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
