// OpenMP kernels for the candidate sieve and the modular elimination. The
// serial references live in sieve_reference.cpp; tests compare the two.

#include <cmath>
#include <exception>

#include <fmt/format.h>
#include <omp.h>

#include "normform/errors.hpp"
#include "normform/sieve.hpp"

namespace normform {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/* Native arithmetic stays exact below these: m^3 and 6 t^6 < 2^124, and
 * k (m-2)/3 < C(m,2) m < 2^93. */
constexpr std::int64_t native_t_limit = std::int64_t(1) << 20;
constexpr std::int64_t native_m_limit = std::int64_t(1) << 31;

/* smallest m with m^3 > n */
u64 first_cube_above(u128 n)
{
    u64 m = static_cast<u64>(std::cbrt(static_cast<long double>(n)));
    auto cube = [](u64 x) { return u128(x) * x * x; };
    while (m > 0 && cube(m) > n)
        --m;
    while (cube(m) <= n)
        ++m;
    return m;
}

void sieve_one_t(u64 t, u64 m_max, std::vector<CandidatePair> & out)
{
    u64 const t3 = t * t * t;
    u64 const d = t3 - 1;
    /* the growth filter m^3 > 6 t^6 gives the start of the m range */
    u64 m = std::max<u64>(3, first_cube_above(u128(6) * t3 * t3));
    m += (2 + 3 - m % 3) % 3; // m = 2 (mod 3)
    for (; m <= m_max; m += 3) {
        u64 const c2 = m * (m - 1) / 2;
        if (c2 % d != 1)
            continue;
        u64 const k = (c2 - 1) / d;
        if ((u128(k) * ((m - 2) / 3)) % t3 != 0)
            continue;
        out.push_back({static_cast<std::int64_t>(t), static_cast<std::int64_t>(m)});
    }
}

} // namespace

CandidateTable enumerate_candidates(std::int64_t t_min, std::int64_t t_max, std::int64_t m_max)
{
    if (t_min < 2 || t_max < t_min || m_max < 3)
        throw InvalidRange(fmt::format("enumerate_candidates needs 2 <= t_min <= t_max and m_max >= 3, "
                                       "got t in [{}, {}], m_max = {}", t_min, t_max, m_max));
    if (t_max >= native_t_limit || m_max >= native_m_limit)
        return reference::enumerate_candidates(t_min, t_max, m_max);

    std::int64_t const nt = t_max - t_min + 1;
    std::vector<std::vector<CandidatePair>> per_t(static_cast<std::size_t>(nt));

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < nt; ++i)
        sieve_one_t(static_cast<u64>(t_min + i), static_cast<u64>(m_max), per_t[static_cast<std::size_t>(i)]);

    std::vector<CandidatePair> pairs;
    for (auto & v : per_t)
        pairs.insert(pairs.end(), v.begin(), v.end());
    return CandidateTable::from_pairs(std::move(pairs));
}

std::vector<EliminationResult> eliminate_all(std::span<CandidatePair const> pairs,
                                             std::span<std::uint64_t const> primes,
                                             SignTarget target)
{
    if (primes.empty())
        throw EmptyPrimeSet("the prime list for the coefficient check is empty");

    std::vector<EliminationResult> results(pairs.size());
    std::exception_ptr failure;
    auto const n = static_cast<std::int64_t>(pairs.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            auto const & p = pairs[static_cast<std::size_t>(i)];
            results[static_cast<std::size_t>(i)] = final_coefficient_check(p.t, p.m, primes, target);
        } catch (...) {
#pragma omp critical(normform_elimination_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace normform
