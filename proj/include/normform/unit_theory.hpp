#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include <gmpxx.h>

#include "normform/cubic_ring.hpp"
#include "normform/interval.hpp"
#include "normform/log_bounds.hpp"

namespace normform {

/* A solution of x^3 - (t^3-1) y^3 + 3 (t^3-1) x y + (t^3-1)^2 = (-1)^delta.
 * When it comes from a unit exponent, x - s y + s^2 = (-1)^delta (t - s)^m;
 * the brute-force search leaves m empty. */
struct SolutionRecord {
    std::int64_t t = 0;
    mpz_class x;
    mpz_class y;
    int delta = 0;
    std::optional<std::int64_t> m;

    friend bool operator==(SolutionRecord const & a, SolutionRecord const & b)
    {
        return a.t == b.t && a.x == b.x && a.y == b.y && a.delta == b.delta && a.m == b.m;
    }
};

/* Artin's inequality for the complex cubic field Q(s): a unit u > 1 has
 * 4 u^3 + 27 > 27 (t^3 - 1)^2. With u0 = t^2 + ts + s^2 = (t - s)^-1,
 * 4 u0^(3/2) + 27 < 27 (t^3-1)^2 rules out u0 being a proper power.
 * Returns true iff the enclosures separate in that direction. Throws
 * InvalidT for t < 2 and InconclusivePrecision if no precision up to 2048
 * bits decides the comparison. */
bool verify_fundamental_unit(std::int64_t t, mpfr_prec_t precision = default_precision);

enum class ExponentClass {
    FunctionalMinus1,
    Functional2,
    ImpossibleZeroOne,
    ImpossibleNegative,
    SieveCandidate,
};

std::string_view to_string(ExponentClass c);

/* For m <= -2: |(t - s)^m| > 9 s^4 (because u0 > 3 s^2) while the other two
 * terms of the unit equation have modulus at most 2 / (3 s^2); so the left
 * side exceeds 9 s^4 - 2 / (3 s^2) > 3 s^2, the modulus of the right side. */
struct NegativeExponentWitness {
    bool u0_exceeds_3s2 = false;         // t^2 + ts + s^2 > 3 s^2
    bool gap_exceeds_rhs = false;        // 9 s^4 - 2 / (3 s^2) > 3 s^2
    bool holds() const { return u0_exceeds_3s2 && gap_exceeds_rhs; }
};

NegativeExponentWitness negative_exponent_witness(RingContext const & ctx,
                                                  mpfr_prec_t precision = default_precision);

/* Tag the unit exponent m. For m <= -2 the witness inequalities are
 * re-verified in intervals; a failure there throws InconclusivePrecision. */
ExponentClass classify_exponent(std::int64_t m, RingContext const & ctx);

/* e = (-1)^delta (t - s)^m; a solution iff the s^2-coefficient of e is 1,
 * in which case (x, y) = (e.a0, -e.a1). The record's invariants (norm value
 * and ring identity) are rechecked before returning; a violation is a
 * logic_error. */
std::optional<SolutionRecord> solution_from_exponent(std::int64_t t, std::int64_t m, int delta);

/* Left-hand side of the norm-form equation. */
mpz_class norm_form_value(mpz_class const & t, mpz_class const & x, mpz_class const & y);

/* x(x - t y)(x - (t^4 + 3t) y) + y^3 at x = t^9 + 3t^6 + 4t^3 + 1,
 * y = t^8 + 3t^5 + 3t^2. */
mpz_class ziegler_form_value(mpz_class const & t);

inline constexpr std::size_t ziegler_min_points = 28;

/* Both sides are polynomials in t of degree <= 27, so equality at 28
 * distinct integers is a proof of the identity. Throws InsufficientPoints if
 * fewer than 28 distinct values are supplied. */
bool verify_ziegler_identity(std::span<std::int64_t const> sample_points);

} // namespace normform
