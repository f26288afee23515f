// Serial reference kernels against their OpenMP counterparts, plus the
// per-iteration cost of one balancing step versus one power-method step.

#include <benchmark/benchmark.h>

#include <vector>

#include "perronkit/generators.hpp"
#include "perronkit/kernels.hpp"

namespace {

using namespace perronkit;

NonnegMatrix sample(std::int64_t n, bool dense) {
    if (dense) return random_primitive(static_cast<std::size_t>(n), 0.5, 11, Storage::Dense);
    return random_primitive(static_cast<std::size_t>(n), 8.0 / static_cast<double>(n), 11, Storage::Csr);
}

template <bool Parallel>
void BM_RowSums(benchmark::State& state) {
    const auto a = sample(state.range(0), state.range(1) != 0);
    std::vector<double> out(a.order());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::row_sums(a.pattern(), a.values(), out);
        } else {
            kernels::serial::row_sums(a.pattern(), a.values(), out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.stored_entries()));
}

template <bool Parallel>
void BM_BalanceStep(benchmark::State& state) {
    const auto a = sample(state.range(0), state.range(1) != 0);
    std::vector<double> values(a.values().begin(), a.values().end());
    std::vector<double> r(a.order()), x(a.order());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::row_sums(a.pattern(), values, r);
            for (std::size_t i = 0; i < r.size(); ++i) x[i] = 1.0 / r[i];
            kernels::parallel::rank_one_scale(a.pattern(), a.values(), x, r, values);
        } else {
            kernels::serial::row_sums(a.pattern(), values, r);
            for (std::size_t i = 0; i < r.size(); ++i) x[i] = 1.0 / r[i];
            kernels::serial::rank_one_scale(a.pattern(), a.values(), x, r, values);
        }
        benchmark::DoNotOptimize(values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.stored_entries()));
}

template <bool Parallel>
void BM_PowerStep(benchmark::State& state) {
    const auto a = sample(state.range(0), state.range(1) != 0);
    std::vector<double> v(a.order(), 1.0), w(a.order());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::matvec(a.pattern(), a.values(), v, w);
        } else {
            kernels::serial::matvec(a.pattern(), a.values(), v, w);
        }
        double m = 0.0;
        for (double e : w) m = e > m ? e : m;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] / m;
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.stored_entries()));
}

void shapes(benchmark::internal::Benchmark* b) {
    b->Args({512, 1})->Args({2048, 1})->Args({20000, 0})->Args({200000, 0});
}

}  // namespace

BENCHMARK(BM_RowSums<false>)->Apply(shapes);
BENCHMARK(BM_RowSums<true>)->Apply(shapes);
BENCHMARK(BM_BalanceStep<false>)->Apply(shapes);
BENCHMARK(BM_BalanceStep<true>)->Apply(shapes);
BENCHMARK(BM_PowerStep<false>)->Apply(shapes);
BENCHMARK(BM_PowerStep<true>)->Apply(shapes);

BENCHMARK_MAIN();
