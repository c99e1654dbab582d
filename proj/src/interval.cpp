#include "normform/interval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace normform {

namespace {

mpfr_prec_t joint(Interval const & a, Interval const & b)
{
    return std::max(a.precision(), b.precision());
}

/* min/max of the four endpoint combinations, each rounded outward */
template <typename Op>
void four_corner(mpfr_ptr lo, mpfr_ptr hi, Interval const & a, Interval const & b, Op op)
{
    mpfr_prec_t const prec = mpfr_get_prec(lo);
    mpfr_t tmp;
    mpfr_init2(tmp, prec);
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            op(tmp, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(tmp, lo))
                mpfr_set(lo, tmp, MPFR_RNDD);
            op(tmp, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(tmp, hi))
                mpfr_set(hi, tmp, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(tmp);
}

} // namespace

Interval::Interval(mpfr_prec_t prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(mpz_class const & v, mpfr_prec_t prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::~Interval()
{
    if (lo_->_mpfr_d) {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
}

Interval::Interval(Interval const & o)
{
    mpfr_init2(lo_, o.precision());
    mpfr_init2(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval && o) noexcept
{
    /* steal the limbs; leave o in a cleared-but-destructible state */
    *lo_ = *o.lo_;
    *hi_ = *o.hi_;
    o.lo_->_mpfr_d = nullptr;
    o.hi_->_mpfr_d = nullptr;
}

Interval & Interval::operator=(Interval const & o)
{
    if (this != &o) {
        Interval copy(o);
        *this = std::move(copy);
    }
    return *this;
}

Interval & Interval::operator=(Interval && o) noexcept
{
    if (this != &o) {
        std::swap(*lo_, *o.lo_);
        std::swap(*hi_, *o.hi_);
    }
    return *this;
}

Interval Interval::from_decimal(std::string_view text, mpfr_prec_t prec)
{
    std::string const s(text);
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0)
        throw std::invalid_argument(fmt::format("not a decimal number: '{}'", s));
    return r;
}

Interval Interval::pi(mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::hull(Interval const & a, Interval const & b)
{
    Interval r(joint(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains(long v) const
{
    return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
}

double Interval::log2_width() const
{
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r;
    if (mpfr_zero_p(w)) {
        r = -std::numeric_limits<double>::infinity();
    } else {
        long e;
        double m = mpfr_get_d_2exp(&e, w, MPFR_RNDU);
        r = std::log2(m) + double(e);
    }
    mpfr_clear(w);
    return r;
}

std::string Interval::to_string(int digits) const
{
    std::string fmt_spec = "%." + std::to_string(std::max(digits - 1, 0)) + "R";
    char * lo_s = nullptr;
    char * hi_s = nullptr;
    mpfr_asprintf(&lo_s, (fmt_spec + "De").c_str(), lo_);
    mpfr_asprintf(&hi_s, (fmt_spec + "Ue").c_str(), hi_);
    std::string r = fmt::format("[{}, {}]", lo_s, hi_s);
    mpfr_free_str(lo_s);
    mpfr_free_str(hi_s);
    return r;
}

Interval operator+(Interval const & a, Interval const & b)
{
    Interval r(joint(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(Interval const & a, Interval const & b)
{
    Interval r(joint(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(Interval const & a)
{
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(Interval const & a, Interval const & b)
{
    Interval r(joint(a, b));
    four_corner(r.lo_, r.hi_, a, b, mpfr_mul);
    return r;
}

Interval operator/(Interval const & a, Interval const & b)
{
    if (b.contains_zero())
        throw std::domain_error("interval division by an enclosure of zero");
    Interval r(joint(a, b));
    four_corner(r.lo_, r.hi_, a, b, mpfr_div);
    return r;
}

Interval operator+(Interval const & a, long b) { return a + Interval(b, a.precision()); }
Interval operator*(Interval const & a, long b) { return a * Interval(b, a.precision()); }
Interval operator*(long a, Interval const & b) { return Interval(a, b.precision()) * b; }
Interval operator/(Interval const & a, long b) { return a / Interval(b, a.precision()); }

Interval sqrt(Interval const & a)
{
    if (mpfr_sgn(a.lo_) < 0)
        throw std::domain_error("sqrt of an interval reaching below zero");
    Interval r(a.precision());
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval cbrt(Interval const & a)
{
    Interval r(a.precision());
    mpfr_cbrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log(Interval const & a)
{
    if (mpfr_sgn(a.lo_) <= 0)
        throw std::domain_error("log of an interval not bounded away from zero");
    Interval r(a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(Interval const & a)
{
    Interval r(a.precision());
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval atan(Interval const & a)
{
    Interval r(a.precision());
    mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval abs(Interval const & a)
{
    if (mpfr_sgn(a.lo_) >= 0)
        return a;
    if (mpfr_sgn(a.hi_) <= 0)
        return -a;
    Interval r(a.precision());
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval pow(Interval const & a, long n)
{
    /* monotone on the positive axis; that is all the callers need */
    if (n < 0 ? mpfr_sgn(a.lo_) <= 0 : mpfr_sgn(a.lo_) < 0)
        throw std::domain_error("pow is only defined here for positive intervals");
    Interval r(a.precision());
    if (n >= 0) {
        mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    } else {
        mpfr_pow_si(r.lo_, a.hi_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.lo_, n, MPFR_RNDU);
    }
    return r;
}

Interval max(Interval const & a, Interval const & b)
{
    Interval r(joint(a, b));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool certainly_less(Interval const & a, Interval const & b)
{
    return mpfr_less_p(a.hi(), b.lo());
}

bool certainly_less_equal(Interval const & a, Interval const & b)
{
    return mpfr_lessequal_p(a.hi(), b.lo());
}

} // namespace normform
