#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "normform/log_bounds.hpp"

namespace normform {

/* Outcome of each necessary condition on (t, m) for a solution with m >= 3:
 *   mod3          m = 2 (mod 3)
 *   smallhammer   C(m,2) = 1 (mod t^3 - 1); then C(m,2) = k (t^3 - 1) + 1
 *   hammer        k (m-2)/3 = 0 (mod t^3)   (only evaluated after the two above)
 *   growth        m^3 > 6 t^6, i.e. m > 6^(1/3) t^2 */
struct AdmissibilityReport {
    std::int64_t t = 0;
    std::int64_t m = 0;
    bool passes_mod3 = false;
    bool passes_smallhammer = false;
    std::optional<mpz_class> k;
    bool passes_hammer = false;
    bool passes_growth = false;
    bool admissible = false;
};

/* Throws InvalidRange if t < 2 or m < 3. */
AdmissibilityReport admissible(std::int64_t t, std::int64_t m);

struct CandidatePair {
    std::int64_t t = 0;
    std::int64_t m = 0;
    friend auto operator<=>(CandidatePair const &, CandidatePair const &) = default;
};

struct CandidateRow {
    std::int64_t t = 0;
    std::int64_t count = 0;
    friend bool operator==(CandidateRow const &, CandidateRow const &) = default;
};

/* Rows hold only t with at least one pair, sorted by t; pairs sorted by
 * (t, m). */
struct CandidateTable {
    std::vector<CandidateRow> rows;
    std::vector<CandidatePair> pairs;

    static CandidateTable from_pairs(std::vector<CandidatePair> pairs);
    std::int64_t total() const { return static_cast<std::int64_t>(pairs.size()); }
    friend bool operator==(CandidateTable const &, CandidateTable const &) = default;
};

/* All admissible (t, m) with t_min <= t <= t_max and 3 <= m <= m_max.
 * OpenMP-parallel over t with machine-integer arithmetic; the output does
 * not depend on the thread count. Throws InvalidRange unless
 * 2 <= t_min <= t_max and m_max >= 3. */
CandidateTable enumerate_candidates(std::int64_t t_min, std::int64_t t_max, std::int64_t m_max);

enum class SignTarget {
    PlusOne,        // only c = 1 is a solution (the "-" sign is excluded mod 3)
    PlusOrMinusOne, // also keep c = -1, re-checking that exclusion
};

struct EliminationResult {
    enum class Status { Eliminated, Survives };
    enum class Method { Modular, Exact };

    std::int64_t t = 0;
    std::int64_t m = 0;
    Status status = Status::Survives;
    Method method = Method::Modular;
    /* first prime p with c != target (mod p); 0 for exact eliminations and
     * survivors */
    std::uint64_t witness_prime = 0;
    std::vector<std::uint64_t> primes_tested;
};

std::string_view to_string(EliminationResult::Status s);

/* s^2-coefficient c of (t - s)^m modulo each prime in turn; Eliminated at the
 * first prime where c is not congruent to the target. Throws EmptyPrimeSet
 * on an empty list and BadModulus for duplicates, p <= 3 or p | t^3 - 1. */
EliminationResult final_coefficient_check(std::int64_t t, std::int64_t m,
                                          std::span<std::uint64_t const> primes,
                                          SignTarget target = SignTarget::PlusOne);

/* final_coefficient_check over every pair, OpenMP-parallel; results are in
 * pair order. */
std::vector<EliminationResult> eliminate_all(std::span<CandidatePair const> pairs,
                                             std::span<std::uint64_t const> primes,
                                             SignTarget target = SignTarget::PlusOne);

/* The `count` largest primes below 2^bits, descending. */
std::vector<std::uint64_t> largest_primes_below_pow2(unsigned bits, std::size_t count);
/* The `count` largest primes strictly below `bound`, descending. */
std::vector<std::uint64_t> primes_below(std::uint64_t bound, std::size_t count);
/* 16 largest primes below 2^62. */
std::vector<std::uint64_t> const & default_primes();

struct VerifyConfig {
    std::optional<std::int64_t> m_max;
    std::optional<std::int64_t> t_max;
    std::vector<std::uint64_t> primes = default_primes();
    SignTarget target = SignTarget::PlusOne;
    mpfr_prec_t precision = default_precision;
    /* take m_max = 225676 instead of re-deriving it */
    bool assume_known_bounds = false;
    /* survivors of the main prime list are retried with this many further
     * primes, then with the exact coefficient when m <= exact_limit */
    std::size_t escalation_primes = 64;
    std::int64_t exact_limit = 4096;
};

struct VerificationReport {
    DerivedBounds bounds;          // t_max here is the one actually searched
    std::int64_t t_min = 2;
    bool fundamental_unit_ok = false;
    bool functional_solutions_ok = false;
    bool negative_exponents_ok = false;
    CandidateTable table;
    std::vector<EliminationResult> eliminations;
    std::int64_t survivors = 0;
    bool verified = false;
};

VerificationReport verify_theorem(VerifyConfig const & config);

namespace reference {

/* Serial enumeration through `admissible` with arbitrary-precision integers,
 * every m from 3 to m_max and every filter evaluated. Slow; the oracle for
 * the OpenMP kernel. */
CandidateTable enumerate_candidates(std::int64_t t_min, std::int64_t t_max, std::int64_t m_max);

/* Serial loop over final_coefficient_check. */
std::vector<EliminationResult> eliminate_all(std::span<CandidatePair const> pairs,
                                             std::span<std::uint64_t const> primes,
                                             SignTarget target = SignTarget::PlusOne);

} // namespace reference

} // namespace normform
