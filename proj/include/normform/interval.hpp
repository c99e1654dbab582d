#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace normform {

/* Closed interval [lo, hi] of MPFR floats. Every operation rounds the lower
 * endpoint toward -inf and the upper toward +inf, so the exact real result
 * of the operation on any points of the operands lies inside. Rounding modes
 * are passed per call; no global MPFR state is touched.
 *
 * The result of a binary operation carries the larger of the two operand
 * precisions. */
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 160);
    Interval(long v, mpfr_prec_t prec);
    Interval(mpz_class const & v, mpfr_prec_t prec);
    ~Interval();

    Interval(Interval const & o);
    Interval(Interval && o) noexcept;
    Interval & operator=(Interval const & o);
    Interval & operator=(Interval && o) noexcept;

    /* Enclosure of a decimal literal such as "644.66". */
    static Interval from_decimal(std::string_view text, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    /* Smallest interval containing both a and b. */
    static Interval hull(Interval const & a, Interval const & b);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    bool contains(long v) const;
    bool contains_zero() const { return contains(0); }
    bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

    /* log2 of the width, or -inf for a point interval. */
    double log2_width() const;

    /* "[lo, hi]" with the given number of significant decimal digits; the
     * printed endpoints are themselves rounded outward. */
    std::string to_string(int digits = 20) const;

    friend Interval operator+(Interval const & a, Interval const & b);
    friend Interval operator-(Interval const & a, Interval const & b);
    friend Interval operator*(Interval const & a, Interval const & b);
    friend Interval operator/(Interval const & a, Interval const & b);
    friend Interval operator-(Interval const & a);

    friend Interval sqrt(Interval const & a);
    friend Interval cbrt(Interval const & a);
    friend Interval log(Interval const & a);
    friend Interval exp(Interval const & a);
    friend Interval atan(Interval const & a);
    friend Interval abs(Interval const & a);
    friend Interval pow(Interval const & a, long n);
    friend Interval max(Interval const & a, Interval const & b);

  private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval operator+(Interval const & a, long b);
Interval operator*(Interval const & a, long b);
Interval operator*(long a, Interval const & b);
Interval operator/(Interval const & a, long b);

/* Verdicts that hold for every point of the operands. */
bool certainly_less(Interval const & a, Interval const & b);
bool certainly_less_equal(Interval const & a, Interval const & b);
inline bool certainly_positive(Interval const & a) { return certainly_less(Interval(0L, a.precision()), a); }

} // namespace normform
