// Serial reference kernels against their OpenMP counterparts.

#include "richlines/configurations.hpp"
#include "richlines/incidence.hpp"
#include "richlines/polynomial.hpp"
#include "richlines/veronese.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace richlines;

namespace {

PointSet bench_points() { return random_points(2, 300, 12, 7); }

Polynomial bench_poly(std::size_t d, std::size_t deg) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-3, 3);
    Polynomial f(d);
    const MonomialBasis B(d, deg);
    for (const auto& e : B.exponents()) f.add_term(e, c(rng));
    return f;
}

Vec bench_slice() {
    Vec S;
    for (long v = -20; v <= 20; ++v) S.push_back(v);
    return S;
}

void BM_RichLinesSerial(benchmark::State& s) {
    const PointSet V = bench_points();
    for (auto _ : s) benchmark::DoNotOptimize(reference::rich_lines(V, 3));
}
void BM_RichLinesParallel(benchmark::State& s) {
    const PointSet V = bench_points();
    for (auto _ : s) benchmark::DoNotOptimize(rich_lines(V, 3));
}

void BM_CountApsSerial(benchmark::State& s) {
    const PointSet V = grid(2, 12);
    for (auto _ : s) benchmark::DoNotOptimize(reference::count_aps(V, 4));
}
void BM_CountApsParallel(benchmark::State& s) {
    const PointSet V = grid(2, 12);
    for (auto _ : s) benchmark::DoNotOptimize(count_aps(V, 4));
}

void BM_EmbedSerial(benchmark::State& s) {
    const PointSet V = grid(3, 8);
    for (auto _ : s) benchmark::DoNotOptimize(reference::embed(V, 4));
}
void BM_EmbedParallel(benchmark::State& s) {
    const PointSet V = grid(3, 8);
    for (auto _ : s) benchmark::DoNotOptimize(embed(V, 4));
}

void BM_SzZeroCountSerial(benchmark::State& s) {
    const Polynomial f = bench_poly(3, 3);
    const Vec S = bench_slice();
    for (auto _ : s) benchmark::DoNotOptimize(reference::sz_zero_count(f, S, false));
}
void BM_SzZeroCountParallel(benchmark::State& s) {
    const Polynomial f = bench_poly(3, 3);
    const Vec S = bench_slice();
    for (auto _ : s) benchmark::DoNotOptimize(sz_zero_count(f, S, false));
}

}  // namespace

BENCHMARK(BM_RichLinesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RichLinesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountApsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountApsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmbedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmbedParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SzZeroCountSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SzZeroCountParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
