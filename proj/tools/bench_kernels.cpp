// Serial reference vs OpenMP kernels on the batch sweeps.

#include "padic/batch.hpp"
#include "padic/covering.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace padic;

std::vector<Poly> random_polys(std::size_t count, unsigned max_degree) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    std::vector<Poly> fs;
    fs.reserve(count);
    while (fs.size() < count) {
        std::vector<Rat> c(deg(rng) + 1);
        for (auto& x : c)
            x = Rat(coeff(rng));
        Poly f{std::move(c)};
        if (!f.is_zero())
            fs.push_back(std::move(f));
    }
    return fs;
}

std::vector<DiffSystem> random_systems(std::size_t count) {
    std::mt19937_64 rng(6789);
    std::uniform_int_distribution<long> small(-9, 9);
    PrimeContext ctx(2);
    std::vector<DiffSystem> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::size_t n = 1 + s % 3;
        RatFuncMatrix G(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly num{Rat(small(rng)), Rat(small(rng)), Rat(small(rng))};
                Poly den{Rat(2 * small(rng) + 1), Rat(1)}; // root outside the open disk
                G.at(i, j) = RatFunc(ctx, num, den);
            }
        out.emplace_back(ctx, G);
    }
    return out;
}

void BM_key_inequality_serial(benchmark::State& state) {
    PrimeContext ctx(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            batch::key_inequality_sweep_serial(ctx, 2, state.range(0)));
}
BENCHMARK(BM_key_inequality_serial)->Arg(100000)->Arg(1000000);

void BM_key_inequality_parallel(benchmark::State& state) {
    PrimeContext ctx(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(batch::key_inequality_sweep(ctx, 2, state.range(0)));
}
BENCHMARK(BM_key_inequality_parallel)->Arg(100000)->Arg(1000000);

void BM_polygon_batch_serial(benchmark::State& state) {
    auto fs = random_polys(static_cast<std::size_t>(state.range(0)), 64);
    PrimeContext ctx(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(batch::build_polygons_serial(fs, ctx));
}
BENCHMARK(BM_polygon_batch_serial)->Arg(1000);

void BM_polygon_batch_parallel(benchmark::State& state) {
    auto fs = random_polys(static_cast<std::size_t>(state.range(0)), 64);
    PrimeContext ctx(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(batch::build_polygons(fs, ctx));
}
BENCHMARK(BM_polygon_batch_parallel)->Arg(1000);

void BM_radius_batch_serial(benchmark::State& state) {
    auto systems = random_systems(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            batch::generic_radius_batch_serial(systems, GaussPoint{Rat(0)}, 12));
}
BENCHMARK(BM_radius_batch_serial)->Arg(32);

void BM_radius_batch_parallel(benchmark::State& state) {
    auto systems = random_systems(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            batch::generic_radius_batch(systems, GaussPoint{Rat(0)}, 12));
}
BENCHMARK(BM_radius_batch_parallel)->Arg(32);

} // namespace

BENCHMARK_MAIN();
