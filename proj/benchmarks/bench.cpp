#include <benchmark/benchmark.h>

#include "specht/characters.hpp"
#include "specht/cuspidal.hpp"
#include "specht/garnir.hpp"

using namespace specht;

static void BM_standard_enumeration(benchmark::State& state) {
    SkewShape s = partition_shape({{4, 3, 2, 1}}, {0}, 2);
    for (auto _ : state) {
        long long n = 0;
        for_each_standard(s, [&](const SkewTableau&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_standard_enumeration);

static void BM_specht_character(benchmark::State& state) {
    SkewShape s = partition_shape({{4, 3, 2, 1}}, {0}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        GradedCharacter x = specht_character(s);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_specht_character)->Arg(2)->Arg(3);

static void BM_shuffle_product(benchmark::State& state) {
    GradedCharacter x = specht_character(partition_shape({{3, 2}}, {0}, 3));
    GradedCharacter y = specht_character(partition_shape({{2, 1}}, {1}, 3));
    for (auto _ : state) {
        GradedCharacter z = shuffle_product(x, y);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_shuffle_product);

static void BM_garnir_set(benchmark::State& state) {
    SkewShape s = make_shape({{11, 10, 7, 2, 2}}, {{7, 4, 3, 1}}, {1}, 2);
    Node A{2, 6, 1};
    for (auto _ : state) {
        auto members = garnir_set(s, A);
        benchmark::DoNotOptimize(members);
    }
}
BENCHMARK(BM_garnir_set);

static void BM_cuspidal_table(benchmark::State& state) {
    for (auto _ : state) {
        // fresh engine each round so the memo does not hide the work
        auto table = cuspidal_table(Preorder::e_row(3), static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_cuspidal_table)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
