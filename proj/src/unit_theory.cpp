#include "normform/unit_theory.hpp"

#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "normform/errors.hpp"

namespace normform {

bool verify_fundamental_unit(std::int64_t t, mpfr_prec_t precision)
{
    if (t < 2)
        throw InvalidT(fmt::format("verify_fundamental_unit needs t >= 2, got {}", t));
    mpz_class const tz(static_cast<long>(t));
    mpz_class const d = tz * tz * tz - 1;
    mpz_class const rhs_exact = 27 * d * d;

    return decide_with_escalation(
        [&](mpfr_prec_t prec) -> std::optional<bool> {
            Interval const u0 = conjugate_modulus_squared(t, prec);
            Interval const lhs = 4 * u0 * sqrt(u0) + 27L;
            Interval const rhs(rhs_exact, prec);
            if (certainly_less(lhs, rhs))
                return true;
            if (certainly_less_equal(rhs, lhs))
                return false;
            return std::nullopt;
        },
        precision, "verify_fundamental_unit");
}

std::string_view to_string(ExponentClass c)
{
    switch (c) {
    case ExponentClass::FunctionalMinus1: return "functional_minus1";
    case ExponentClass::Functional2: return "functional_2";
    case ExponentClass::ImpossibleZeroOne: return "impossible_zero_one";
    case ExponentClass::ImpossibleNegative: return "impossible_negative";
    case ExponentClass::SieveCandidate: return "sieve_candidate";
    }
    return "?";
}

NegativeExponentWitness negative_exponent_witness(RingContext const & ctx, mpfr_prec_t precision)
{
    if (!ctx.t().fits_slong_p())
        throw InvalidT("negative_exponent_witness: t does not fit a machine word");
    std::int64_t const t = ctx.t().get_si();
    NegativeExponentWitness w;
    w.u0_exceeds_3s2 = decide_with_escalation(
        [t](mpfr_prec_t prec) -> std::optional<bool> {
            Interval const s = real_cube_root(t, prec);
            Interval const u0 = conjugate_modulus_squared(t, prec);
            Interval const three_s2 = 3 * s * s;
            if (certainly_less(three_s2, u0))
                return true;
            if (certainly_less_equal(u0, three_s2))
                return false;
            return std::nullopt;
        },
        precision, "negative_exponent_witness");
    w.gap_exceeds_rhs = decide_with_escalation(
        [t](mpfr_prec_t prec) -> std::optional<bool> {
            Interval const s = real_cube_root(t, prec);
            Interval const s2 = s * s;
            Interval const gap = 9 * s2 * s2 - Interval(2L, prec) / (3 * s2);
            Interval const rhs = 3 * s2;
            if (certainly_less(rhs, gap))
                return true;
            if (certainly_less_equal(gap, rhs))
                return false;
            return std::nullopt;
        },
        precision, "negative_exponent_witness");
    return w;
}

ExponentClass classify_exponent(std::int64_t m, RingContext const & ctx)
{
    if (m == -1)
        return ExponentClass::FunctionalMinus1;
    if (m == 2)
        return ExponentClass::Functional2;
    if (m == 0 || m == 1)
        return ExponentClass::ImpossibleZeroOne;
    if (m >= 3)
        return ExponentClass::SieveCandidate;
    if (!negative_exponent_witness(ctx).holds())
        throw InconclusivePrecision(fmt::format(
            "negative-exponent witness inequality not confirmed for t = {}", ctx.t().get_str()));
    return ExponentClass::ImpossibleNegative;
}

mpz_class norm_form_value(mpz_class const & t, mpz_class const & x, mpz_class const & y)
{
    mpz_class const d = t * t * t - 1;
    return x * x * x - d * y * y * y + 3 * d * x * y + d * d;
}

std::optional<SolutionRecord> solution_from_exponent(std::int64_t t, std::int64_t m, int delta)
{
    if (delta != 0 && delta != 1)
        throw std::invalid_argument(fmt::format("delta must be 0 or 1, got {}", delta));
    RingContext const ctx(static_cast<long>(t));
    RingElement e = pow(fundamental_unit(ctx), m, ctx);
    if (delta == 1)
        e = -e;
    if (e.a2 != 1)
        return std::nullopt;

    SolutionRecord rec{t, e.a0, -e.a1, delta, m};
    mpz_class const expected = delta == 0 ? 1 : -1;
    if (norm_form_value(ctx.t(), rec.x, rec.y) != expected ||
        !(RingElement{rec.x, -rec.y, 1} == e))
        throw std::logic_error(fmt::format("solution record invariant broken at t = {}, m = {}", t, m));
    return rec;
}

mpz_class ziegler_form_value(mpz_class const & t)
{
    mpz_class const t2 = t * t;
    mpz_class const t3 = t2 * t;
    mpz_class const t6 = t3 * t3;
    mpz_class const x = t6 * t3 + 3 * t6 + 4 * t3 + 1;
    mpz_class const y = t6 * t2 + 3 * t3 * t2 + 3 * t2;
    mpz_class const a2 = t3 * t + 3 * t;
    return x * (x - t * y) * (x - a2 * y) + y * y * y;
}

bool verify_ziegler_identity(std::span<std::int64_t const> sample_points)
{
    std::set<std::int64_t> const distinct(sample_points.begin(), sample_points.end());
    if (distinct.size() < ziegler_min_points)
        throw InsufficientPoints(fmt::format(
            "need at least {} distinct sample points, got {}", ziegler_min_points, distinct.size()));
    for (std::int64_t t : distinct) {
        if (ziegler_form_value(mpz_class(static_cast<long>(t))) != 1)
            return false;
    }
    return true;
}

} // namespace normform
