#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "normform/interval.hpp"

namespace normform {

inline constexpr mpfr_prec_t default_precision = 160;
inline constexpr mpfr_prec_t max_precision = 2048;

/* What derive_m_max returns; used when derivation is skipped. */
inline constexpr std::int64_t known_m_max = 225676;

/* Run `decide` at `start`, doubling the precision while it returns nullopt.
 * Throws InconclusivePrecision once max_precision has been tried. */
bool decide_with_escalation(std::function<std::optional<bool>(mpfr_prec_t)> const & decide,
                            mpfr_prec_t start, char const * what);

/* Real cube root of t^3 - 1. */
Interval real_cube_root(std::int64_t t, mpfr_prec_t prec);

/* |t - omega s|^2 = t^2 + t s + s^2. */
Interval conjugate_modulus_squared(std::int64_t t, mpfr_prec_t prec);

/* arg(t - omega s), omega = exp(2 pi i / 3). Lies in (-pi/6, 0). */
Interval unit_argument(std::int64_t t, mpfr_prec_t prec);

/* Linear form |Lambda_1| = |m log r + log(-1/omega) - b (2 pi i / 3)| with
 * r = (t - omega s) / (t - omega^2 s). Since r = exp(2 i phi) lies on the unit
 * circle and -1/omega = exp(i pi / 3), the form is purely imaginary with
 * argument theta = 2 m phi + pi/3 - 2 pi b / 3; b is the nearest integer to
 * theta / (2 pi / 3), so |Lambda_1| <= pi / 3.
 *
 * `upper_bound` and `laurent_lower` are the two sides the proof plays
 * against each other. Laurent's bound holds for every (t, m); the upper
 * bound only holds when (t, m) comes from an actual solution, so
 * `within_upper_bound` is a reported fact, not an invariant. */
struct Lambda1Evaluation {
    std::int64_t t = 0;
    std::int64_t m = 0;
    std::int64_t b = 0;
    mpfr_prec_t precision = 0;
    Interval total_argument;
    Interval lambda1_abs;
    Interval upper_bound;
    Interval laurent_lower;
    bool within_upper_bound = false;
    bool above_laurent_lower = false;
};

/* Throws InvalidRange unless t >= 2 and m >= 1, and InconclusivePrecision if
 * b cannot be isolated below max_precision or the final enclosure of
 * |Lambda_1| is wider than 2^(-precision/2). */
Lambda1Evaluation eval_lambda1(std::int64_t t, std::int64_t m, mpfr_prec_t precision = default_precision);

/* 6 / 3^(m/4) * s^(2-m) + 2 (t-s)^m / (sqrt(3) s^m). */
Interval lambda1_upper(std::int64_t t, std::int64_t m, mpfr_prec_t precision = default_precision);

/* Laurent's lower bound for log|Lambda_1| with D = 3, log A1 = log(u)/2,
 * log A2 = 2 pi / 9, b' = 2m / (3 log u) + 3m / (2 pi), u = t^2 + ts + s^2:
 *     -22.8 D^4 max{log b' + 0.21, 30/D, 1}^2 log A1 log A2. */
Interval laurent_lower(std::int64_t t, std::int64_t m, mpfr_prec_t precision = default_precision);

/* b' from the bound above. */
Interval laurent_bprime(std::int64_t t, std::int64_t m, mpfr_prec_t precision = default_precision);

/* 22.8 * 3^4 * (2 pi / 9) * (1/2); the coefficient of log u once D, log A1 and
 * log A2 are substituted. Encloses 644.6548... */
Interval laurent_coefficient(mpfr_prec_t precision = default_precision);

/* Smallest m with log(2m) + 0.21 > 30/D = 10, decided rigorously. From this m
 * on, and as long as b' < 2m, the max in Laurent's bound is log(2m) + 0.21. */
std::int64_t max_term_switch_point(mpfr_prec_t precision = default_precision);

/* 644.66 (log(2m) + 0.21)^2 + 1.3 - m/2; m is admissible for the exponent
 * bound iff this is >= 0. */
Interval exponent_bound_margin(std::int64_t m, mpfr_prec_t precision = default_precision);

/* Largest m with m/2 <= 644.66 (log(2m) + 0.21)^2 + 1.3. */
std::int64_t derive_m_max(mpfr_prec_t precision = default_precision);

struct DerivedBounds {
    std::int64_t m_max = 0;
    std::int64_t t_max_coarse = 0; // largest t with 2 t^3 <= m_max^2
    std::int64_t t_max = 0;        // largest t with 6 t^6 <= m_max^3
};

/* Exact integer inversion. Throws InvalidRange if m_max < 3. */
DerivedBounds derive_t_bounds(std::int64_t m_max);

} // namespace normform
