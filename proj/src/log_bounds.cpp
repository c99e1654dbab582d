#include "normform/log_bounds.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "normform/errors.hpp"

namespace normform {

bool decide_with_escalation(std::function<std::optional<bool>(mpfr_prec_t)> const & decide,
                            mpfr_prec_t start, char const * what)
{
    for (mpfr_prec_t prec = std::min(start, max_precision);; prec = std::min(2 * prec, max_precision)) {
        if (auto verdict = decide(prec))
            return *verdict;
        if (prec == max_precision)
            break;
    }
    throw InconclusivePrecision(
        fmt::format("{}: enclosure does not separate the two sides at {} bits", what, max_precision));
}

Interval real_cube_root(std::int64_t t, mpfr_prec_t prec)
{
    mpz_class const tz(static_cast<long>(t));
    return cbrt(Interval(mpz_class(tz * tz * tz - 1), prec));
}

Interval conjugate_modulus_squared(std::int64_t t, mpfr_prec_t prec)
{
    Interval const s = real_cube_root(t, prec);
    Interval const ti(static_cast<long>(t), prec);
    return ti * ti + ti * s + s * s;
}

Interval unit_argument(std::int64_t t, mpfr_prec_t prec)
{
    /* t - omega s = (t + s/2) - i (sqrt(3)/2) s, real part > 0 */
    Interval const s = real_cube_root(t, prec);
    Interval const ti(static_cast<long>(t), prec);
    Interval const sqrt3 = sqrt(Interval(3L, prec));
    return -atan(sqrt3 * s / (ti * 2 + s));
}

namespace {

void check_t_m(std::int64_t t, std::int64_t m, std::int64_t m_min)
{
    if (t < 2 || m < m_min)
        throw InvalidRange(fmt::format("need t >= 2 and m >= {}, got t = {}, m = {}", m_min, t, m));
}

/* floor(x + 1/2) for each endpoint; equal iff the nearest integer is unique
 * over the whole enclosure. */
std::optional<std::int64_t> nearest_integer(Interval const & x)
{
    mpfr_t tmp;
    mpfr_init2(tmp, x.precision() + 2);
    mpz_class lo, hi;
    mpfr_add_d(tmp, x.lo(), 0.5, MPFR_RNDD);
    mpfr_get_z(lo.get_mpz_t(), tmp, MPFR_RNDD);
    mpfr_add_d(tmp, x.hi(), 0.5, MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), tmp, MPFR_RNDD);
    mpfr_clear(tmp);
    if (lo != hi || !lo.fits_slong_p())
        return std::nullopt;
    return lo.get_si();
}

Interval two_pi_over_three(mpfr_prec_t prec)
{
    return Interval::pi(prec) * 2 / 3;
}

} // namespace

Interval lambda1_upper(std::int64_t t, std::int64_t m, mpfr_prec_t precision)
{
    check_t_m(t, m, 3);
    Interval const s = real_cube_root(t, precision);
    Interval const u = conjugate_modulus_squared(t, precision);
    /* t - s = 1 / (t^2 + ts + s^2), avoiding the cancellation */
    Interval const t_minus_s = Interval(1L, precision) / u;
    Interval const three(3L, precision);
    Interval const mi(static_cast<long>(m), precision);

    Interval const first = Interval(6L, precision) / exp(mi * log(three) / 4) * pow(s, static_cast<long>(2 - m));
    Interval const second = 2 * pow(t_minus_s, static_cast<long>(m)) / (sqrt(three) * pow(s, static_cast<long>(m)));
    return first + second;
}

Interval laurent_bprime(std::int64_t t, std::int64_t m, mpfr_prec_t precision)
{
    check_t_m(t, m, 1);
    Interval const log_u = log(conjugate_modulus_squared(t, precision));
    Interval const mi(static_cast<long>(m), precision);
    return 2 * mi / (3 * log_u) + 3 * mi / (2 * Interval::pi(precision));
}

Interval laurent_lower(std::int64_t t, std::int64_t m, mpfr_prec_t precision)
{
    check_t_m(t, m, 1);
    constexpr long degree = 3; // [Q(s, omega) : Q] / [R(s, omega) : R] = 6 / 2
    Interval const log_u = log(conjugate_modulus_squared(t, precision));
    Interval const log_a1 = log_u / 2;
    Interval const log_a2 = Interval::pi(precision) * 2 / 9;

    Interval const maxterm = max(max(log(laurent_bprime(t, m, precision)) + Interval::from_decimal("0.21", precision),
                                     Interval(30L, precision) / degree),
                                 Interval(1L, precision));
    Interval const scale = Interval::from_decimal("22.8", precision) * (degree * degree * degree * degree);
    return -(scale * maxterm * maxterm * log_a1 * log_a2);
}

Interval laurent_coefficient(mpfr_prec_t precision)
{
    return Interval::from_decimal("22.8", precision) * 81 * (Interval::pi(precision) * 2 / 9) / 2;
}

Lambda1Evaluation eval_lambda1(std::int64_t t, std::int64_t m, mpfr_prec_t precision)
{
    check_t_m(t, m, 1);
    Lambda1Evaluation ev;
    ev.t = t;
    ev.m = m;

    std::optional<std::int64_t> b;
    mpfr_prec_t prec = std::min(precision, max_precision);
    for (;; prec = std::min(2 * prec, max_precision)) {
        Interval theta = 2 * Interval(static_cast<long>(m), prec) * unit_argument(t, prec) + Interval::pi(prec) / 3;
        b = nearest_integer(theta / two_pi_over_three(prec));
        if (b) {
            ev.total_argument = std::move(theta);
            break;
        }
        if (prec == max_precision)
            break;
    }
    if (!b)
        throw InconclusivePrecision(fmt::format(
            "eval_lambda1(t = {}, m = {}): cannot isolate b below {} bits", t, m, max_precision));

    ev.b = *b;
    ev.precision = prec;
    ev.lambda1_abs = abs(ev.total_argument - Interval(static_cast<long>(*b), prec) * two_pi_over_three(prec));
    if (ev.lambda1_abs.log2_width() > -double(precision) / 2)
        throw InconclusivePrecision(fmt::format(
            "eval_lambda1(t = {}, m = {}): enclosure width 2^{:.1f} exceeds tolerance 2^-{}",
            t, m, ev.lambda1_abs.log2_width(), precision / 2));

    ev.laurent_lower = laurent_lower(t, m, prec);
    ev.above_laurent_lower = !ev.lambda1_abs.contains_zero() &&
                             certainly_less_equal(ev.laurent_lower, log(ev.lambda1_abs));
    if (m >= 3) {
        ev.upper_bound = lambda1_upper(t, m, prec);
        ev.within_upper_bound = certainly_less_equal(ev.lambda1_abs, ev.upper_bound);
    }
    return ev;
}

std::int64_t max_term_switch_point(mpfr_prec_t precision)
{
    auto exceeds = [](std::int64_t m, mpfr_prec_t start) {
        return decide_with_escalation(
            [m](mpfr_prec_t prec) -> std::optional<bool> {
                Interval const x = log(Interval(2 * static_cast<long>(m), prec)) + Interval::from_decimal("0.21", prec);
                Interval const ten(10L, prec);
                if (certainly_less(ten, x))
                    return true;
                if (certainly_less_equal(x, ten))
                    return false;
                return std::nullopt;
            },
            start, "max_term_switch_point");
    };
    /* monotone in m: bracket then bisect */
    std::int64_t lo = 1, hi = 2;
    while (!exceeds(hi, precision)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::int64_t const mid = lo + (hi - lo) / 2;
        (exceeds(mid, precision) ? hi : lo) = mid;
    }
    return hi;
}

Interval exponent_bound_margin(std::int64_t m, mpfr_prec_t precision)
{
    if (m < 1)
        throw InvalidRange(fmt::format("exponent_bound_margin needs m >= 1, got {}", m));
    Interval const mi(static_cast<long>(m), precision);
    Interval const inner = log(mi * 2) + Interval::from_decimal("0.21", precision);
    return Interval::from_decimal("644.66", precision) * inner * inner + Interval::from_decimal("1.3", precision) - mi / 2;
}

std::int64_t derive_m_max(mpfr_prec_t precision)
{
    auto holds = [precision](std::int64_t m) {
        return decide_with_escalation(
            [m](mpfr_prec_t prec) -> std::optional<bool> {
                Interval const margin = exponent_bound_margin(m, prec);
                Interval const zero(0L, prec);
                if (certainly_less_equal(zero, margin))
                    return true;
                if (certainly_less(margin, zero))
                    return false;
                return std::nullopt;
            },
            precision, "derive_m_max");
    };
    /* the margin is concave in m for m >= 2 and positive at m = 3, so the m
     * satisfying the bound form an initial segment [3, m_max] */
    std::int64_t lo = 3;
    if (!holds(lo))
        throw std::logic_error("exponent bound fails already at m = 3");
    std::int64_t hi = 4;
    while (holds(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::int64_t const mid = lo + (hi - lo) / 2;
        (holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

namespace {

/* largest t >= 0 with c * t^k <= n */
std::int64_t largest_root(mpz_class const & n, long c, unsigned long k)
{
    mpz_class q = n / c;
    mpz_class r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), k);
    auto power = [k](mpz_class const & x) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), k);
        return p;
    };
    while (c * power(r + 1) <= n)
        ++r;
    while (r > 0 && c * power(r) > n)
        --r;
    return r.get_si();
}

} // namespace

DerivedBounds derive_t_bounds(std::int64_t m_max)
{
    if (m_max < 3)
        throw InvalidRange(fmt::format("derive_t_bounds needs m_max >= 3, got {}", m_max));
    mpz_class const m(static_cast<long>(m_max));
    DerivedBounds r;
    r.m_max = m_max;
    r.t_max_coarse = largest_root(m * m, 2, 3);
    r.t_max = largest_root(m * m * m, 6, 6);
    return r;
}

} // namespace normform
