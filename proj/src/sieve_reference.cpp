#include <fmt/format.h>

#include "normform/errors.hpp"
#include "normform/sieve.hpp"

namespace normform::reference {

CandidateTable enumerate_candidates(std::int64_t t_min, std::int64_t t_max, std::int64_t m_max)
{
    if (t_min < 2 || t_max < t_min || m_max < 3)
        throw InvalidRange(fmt::format("enumerate_candidates needs 2 <= t_min <= t_max and m_max >= 3, "
                                       "got t in [{}, {}], m_max = {}", t_min, t_max, m_max));
    std::vector<CandidatePair> pairs;
    for (std::int64_t t = t_min; t <= t_max; ++t) {
        for (std::int64_t m = 3; m <= m_max; ++m) {
            if (admissible(t, m).admissible)
                pairs.push_back({t, m});
        }
    }
    return CandidateTable::from_pairs(std::move(pairs));
}

std::vector<EliminationResult> eliminate_all(std::span<CandidatePair const> pairs,
                                             std::span<std::uint64_t const> primes,
                                             SignTarget target)
{
    std::vector<EliminationResult> results;
    results.reserve(pairs.size());
    for (auto const & p : pairs)
        results.push_back(final_coefficient_check(p.t, p.m, primes, target));
    return results;
}

} // namespace normform::reference
