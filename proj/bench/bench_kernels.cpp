// Serial reference paths against the OpenMP kernels. Run with
// OMP_NUM_THREADS set to compare scaling; on one core the two should be close.

#include <benchmark/benchmark.h>

#include "normform/oracle.hpp"
#include "normform/sieve.hpp"

using namespace normform;

namespace {

constexpr std::int64_t m_max = 225676;

void BM_enumerate_reference(benchmark::State & state)
{
    auto const t_max = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::enumerate_candidates(2, t_max, m_max));
}

void BM_enumerate_openmp(benchmark::State & state)
{
    auto const t_max = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_candidates(2, t_max, m_max));
}

std::vector<CandidatePair> const & pairs()
{
    static auto const p = enumerate_candidates(2, 352, m_max).pairs;
    return p;
}

void BM_eliminate_reference(benchmark::State & state)
{
    std::vector<CandidatePair> const subset(pairs().begin(), pairs().begin() + state.range(0));
    auto const primes = default_primes();
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::eliminate_all(subset, primes, SignTarget::PlusOne));
}

void BM_eliminate_openmp(benchmark::State & state)
{
    std::vector<CandidatePair> const subset(pairs().begin(), pairs().begin() + state.range(0));
    auto const primes = default_primes();
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate_all(subset, primes, SignTarget::PlusOne));
}

void BM_oracle_reference(benchmark::State & state)
{
    SearchWindow const w(2, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::brute_force(w));
}

void BM_oracle_openmp(benchmark::State & state)
{
    SearchWindow const w(2, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force(w));
}

} // namespace

// the mpz reference needs about 30 s for t <= 352, so it stops at 25
BENCHMARK(BM_enumerate_reference)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_openmp)->Arg(10)->Arg(25)->Arg(352)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eliminate_reference)->Arg(1000)->Arg(12661)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eliminate_openmp)->Arg(1000)->Arg(12661)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_reference)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_openmp)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
