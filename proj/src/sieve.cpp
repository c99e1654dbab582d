#include "normform/sieve.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "normform/cubic_ring.hpp"
#include "normform/errors.hpp"
#include "normform/unit_theory.hpp"

namespace normform {

AdmissibilityReport admissible(std::int64_t t, std::int64_t m)
{
    if (t < 2 || m < 3)
        throw InvalidRange(fmt::format("admissible needs t >= 2 and m >= 3, got t = {}, m = {}", t, m));
    AdmissibilityReport r;
    r.t = t;
    r.m = m;

    mpz_class const tz(static_cast<long>(t));
    mpz_class const mz(static_cast<long>(m));
    mpz_class const t3 = tz * tz * tz;
    mpz_class const d = t3 - 1;

    r.passes_mod3 = m % 3 == 2;

    mpz_class const c2 = mz * (mz - 1) / 2;
    mpz_class rem;
    mpz_fdiv_r(rem.get_mpz_t(), c2.get_mpz_t(), d.get_mpz_t());
    r.passes_smallhammer = rem == 1;
    if (r.passes_smallhammer)
        r.k = (c2 - 1) / d;

    if (r.passes_mod3 && r.passes_smallhammer) {
        mpz_class const prod = *r.k * ((mz - 2) / 3);
        r.passes_hammer = mpz_divisible_p(prod.get_mpz_t(), t3.get_mpz_t()) != 0;
    }

    r.passes_growth = mz * mz * mz > 6 * t3 * t3;
    r.admissible = r.passes_mod3 && r.passes_smallhammer && r.passes_hammer && r.passes_growth;
    return r;
}

CandidateTable CandidateTable::from_pairs(std::vector<CandidatePair> pairs)
{
    std::sort(pairs.begin(), pairs.end());
    CandidateTable table;
    for (auto const & p : pairs) {
        if (table.rows.empty() || table.rows.back().t != p.t)
            table.rows.push_back({p.t, 0});
        ++table.rows.back().count;
    }
    table.pairs = std::move(pairs);
    return table;
}

std::string_view to_string(EliminationResult::Status s)
{
    return s == EliminationResult::Status::Eliminated ? "eliminated" : "survives";
}

namespace {

void validate_primes(std::span<std::uint64_t const> primes)
{
    if (primes.empty())
        throw EmptyPrimeSet("the prime list for the coefficient check is empty");
    std::set<std::uint64_t> const seen(primes.begin(), primes.end());
    if (seen.size() != primes.size())
        throw BadModulus("the prime list contains duplicates");
}

bool matches_target(std::uint64_t c, std::uint64_t p, SignTarget target)
{
    if (c == 1)
        return true;
    return target == SignTarget::PlusOrMinusOne && c == p - 1;
}

} // namespace

EliminationResult final_coefficient_check(std::int64_t t, std::int64_t m,
                                          std::span<std::uint64_t const> primes,
                                          SignTarget target)
{
    validate_primes(primes);
    if (m < 0)
        throw InvalidRange(fmt::format("final_coefficient_check needs m >= 0, got {}", m));
    RingContext const ctx(static_cast<long>(t));
    RingElement const unit = fundamental_unit(ctx);

    EliminationResult r;
    r.t = t;
    r.m = m;
    for (std::uint64_t p : primes) {
        ModularRingElement const e = pow_mod_prime(unit, static_cast<std::uint64_t>(m), ctx, p);
        r.primes_tested.push_back(p);
        if (!matches_target(e.r2, p, target)) {
            r.status = EliminationResult::Status::Eliminated;
            r.witness_prime = p;
            return r;
        }
    }
    r.status = EliminationResult::Status::Survives;
    return r;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound, std::size_t count)
{
    std::vector<std::uint64_t> out;
    out.reserve(count);
    mpz_class n;
    /* BPSW in mpz_probab_prime_p has no false positives below 2^64 */
    for (std::uint64_t c = bound - 1; out.size() < count && c > 3; --c) {
        n = static_cast<unsigned long>(c);
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0)
            out.push_back(c);
    }
    return out;
}

std::vector<std::uint64_t> largest_primes_below_pow2(unsigned bits, std::size_t count)
{
    if (bits < 3 || bits > 63)
        throw InvalidRange(fmt::format("prime bit size {} outside [3, 63]", bits));
    return primes_below(std::uint64_t(1) << bits, count);
}

std::vector<std::uint64_t> const & default_primes()
{
    static std::vector<std::uint64_t> const primes = largest_primes_below_pow2(62, 16);
    return primes;
}

namespace {

bool check_functional_solutions(std::int64_t t)
{
    mpz_class const tz(static_cast<long>(t));
    auto const minus1 = solution_from_exponent(t, -1, 0);
    auto const two = solution_from_exponent(t, 2, 0);
    bool ok = minus1 && minus1->x == tz * tz && minus1->y == -tz &&
              two && two->x == tz * tz && two->y == 2 * tz;
    /* the "-" sign never gives s^2-coefficient 1 for these exponents */
    ok = ok && !solution_from_exponent(t, -1, 1) && !solution_from_exponent(t, 2, 1);
    return ok;
}

EliminationResult escalate(EliminationResult r, VerifyConfig const & config)
{
    std::uint64_t const floor = *std::min_element(config.primes.begin(), config.primes.end());
    auto const extra = primes_below(floor, config.escalation_primes);
    if (!extra.empty()) {
        auto again = final_coefficient_check(r.t, r.m, extra, config.target);
        again.primes_tested.insert(again.primes_tested.begin(), r.primes_tested.begin(), r.primes_tested.end());
        r = std::move(again);
        if (r.status == EliminationResult::Status::Eliminated)
            return r;
    }
    if (r.m <= config.exact_limit) {
        RingContext const ctx(static_cast<long>(r.t));
        RingElement const e = pow(fundamental_unit(ctx), r.m, ctx);
        bool const hit = e.a2 == 1 || (config.target == SignTarget::PlusOrMinusOne && e.a2 == -1);
        if (!hit) {
            r.status = EliminationResult::Status::Eliminated;
            r.method = EliminationResult::Method::Exact;
            r.witness_prime = 0;
        }
    }
    return r;
}

} // namespace

VerificationReport verify_theorem(VerifyConfig const & config)
{
    validate_primes(config.primes);

    VerificationReport report;
    std::int64_t const m_max = config.m_max   ? *config.m_max
                               : config.assume_known_bounds ? known_m_max
                                                            : derive_m_max(config.precision);
    report.bounds = derive_t_bounds(m_max);
    if (config.t_max)
        report.bounds.t_max = *config.t_max;
    std::int64_t const t_max = report.bounds.t_max;
    if (t_max < report.t_min)
        throw InvalidRange(fmt::format("t_max = {} leaves nothing to search", t_max));

    report.fundamental_unit_ok = true;
    report.functional_solutions_ok = true;
    report.negative_exponents_ok = true;
    for (std::int64_t t = report.t_min; t <= t_max; ++t) {
        report.fundamental_unit_ok = report.fundamental_unit_ok && verify_fundamental_unit(t, config.precision);
        report.functional_solutions_ok = report.functional_solutions_ok && check_functional_solutions(t);
        report.negative_exponents_ok = report.negative_exponents_ok &&
                                       negative_exponent_witness(RingContext(static_cast<long>(t)), config.precision).holds();
    }

    report.table = enumerate_candidates(report.t_min, t_max, m_max);
    report.eliminations = eliminate_all(report.table.pairs, config.primes, config.target);
    for (auto & r : report.eliminations) {
        if (r.status == EliminationResult::Status::Survives)
            r = escalate(std::move(r), config);
        if (r.status == EliminationResult::Status::Survives)
            ++report.survivors;
    }

    report.verified = report.fundamental_unit_ok && report.functional_solutions_ok &&
                      report.negative_exponents_ok && report.survivors == 0;
    return report;
}

} // namespace normform
