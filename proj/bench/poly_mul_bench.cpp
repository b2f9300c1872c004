// Serial vs OpenMP convolution on workloads shaped like the family builds:
// moderate degree with multi-limb coefficients.

#include "mz/poly.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

mz::IntPoly random_poly(std::size_t deg, unsigned coeff_bits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<mz::BigInt> coeffs;
    coeffs.reserve(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) {
        mz::BigInt c(1);
        for (unsigned b = 0; b < coeff_bits; b += 60) {
            c = c * mz::BigInt(static_cast<long>(rng() >> 4)) + mz::BigInt(static_cast<long>(i));
        }
        if (rng() & 1) c = -c;
        coeffs.push_back(std::move(c));
    }
    coeffs[deg] = mz::BigInt(1) + abs(coeffs[deg]); // keep the degree
    return mz::IntPoly(mz::Variable::x, std::move(coeffs));
}

void BM_MulSerial(benchmark::State& state) {
    const auto deg = static_cast<std::size_t>(state.range(0));
    const auto bits = static_cast<unsigned>(state.range(1));
    mz::IntPoly f = random_poly(deg, bits, 7);
    mz::IntPoly g = random_poly(deg, bits, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mz::mul_serial(f, g));
    }
}

void BM_MulParallel(benchmark::State& state) {
    const auto deg = static_cast<std::size_t>(state.range(0));
    const auto bits = static_cast<unsigned>(state.range(1));
    mz::IntPoly f = random_poly(deg, bits, 7);
    mz::IntPoly g = random_poly(deg, bits, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mz::mul_parallel(f, g));
    }
}

} // namespace

BENCHMARK(BM_MulSerial)
    ->Args({128, 256})
    ->Args({512, 1024})
    ->Args({1024, 4096})
    ->Args({2048, 6144})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)
    ->Args({128, 256})
    ->Args({512, 1024})
    ->Args({1024, 4096})
    ->Args({2048, 6144})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
