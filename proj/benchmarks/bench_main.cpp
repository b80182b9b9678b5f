#include <benchmark/benchmark.h>

#include "exdiv/arith.hpp"
#include "exdiv/oracle.hpp"
#include "exdiv/verify.hpp"

namespace {

void BM_factorize_semiprime(benchmark::State& state) {
    // product of two ~31-bit primes, worst case for the rho stage
    const std::uint64_t n = 2147483647ULL * 2147483629ULL;
    for (auto _ : state) benchmark::DoNotOptimize(exdiv::factorize(n));
}
BENCHMARK(BM_factorize_semiprime);

void BM_tau_e_range(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint64_t n = 1; n <= 10000; ++n) acc += exdiv::tau_e(n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_tau_e_range);

void BM_dedekind_oracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exdiv::oracle::dedekind_quadratic_oracle(-87, 997));
}
BENCHMARK(BM_dedekind_oracle);

void BM_thm_2_12_sweep(benchmark::State& state) {
    exdiv::SweepRange r;
    r.max_e = 60;
    r.max_g = 12;
    for (auto _ : state) benchmark::DoNotOptimize(exdiv::sweep("thm_2_12", r));
}
BENCHMARK(BM_thm_2_12_sweep);

}  // namespace

BENCHMARK_MAIN();
