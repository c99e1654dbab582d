#include "doctest.h"

#include <stdexcept>

#include "normform/interval.hpp"

using namespace normform;

TEST_CASE("enclosures contain the exact value")
{
    for (mpfr_prec_t prec : {24, 53, 160}) {
        Interval const third = Interval(1L, prec) / Interval(3L, prec);
        CHECK((third * 3).contains(1));
        CHECK(third.log2_width() > -double(prec) - 4);

        Interval const r2 = sqrt(Interval(2L, prec));
        CHECK((r2 * r2).contains(2));
        CHECK_FALSE(certainly_less(r2 * r2, Interval(2L, prec)));

        Interval const c = cbrt(Interval(7L, prec));
        CHECK((c * c * c).contains(7));

        CHECK((exp(log(Interval(5L, prec)))).contains(5));
    }
}

TEST_CASE("decimal literals are enclosed, not rounded")
{
    Interval const tenth = Interval::from_decimal("0.1", 160);
    CHECK(tenth.log2_width() > -200);
    CHECK((tenth * 10).contains(1));
    Interval const exact = Interval::from_decimal("0.5", 160);
    CHECK(exact.log2_width() == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(Interval::from_decimal("12abc", 64), std::invalid_argument);
}

TEST_CASE("pi and atan")
{
    Interval const pi = Interval::pi(200);
    Interval const four_atan1 = atan(Interval(1L, 200)) * 4;
    CHECK((pi - four_atan1).contains_zero());
    CHECK(certainly_less(Interval::from_decimal("3.14159265358979", 200), pi));
    CHECK(certainly_less(pi, Interval::from_decimal("3.14159265358980", 200)));
}

TEST_CASE("multiplication across zero and abs")
{
    Interval const a = Interval::hull(Interval(-2L, 64), Interval(3L, 64));
    Interval const b = Interval::hull(Interval(-5L, 64), Interval(1L, 64));
    Interval const p = a * b;
    CHECK(mpfr_cmp_si(p.lo(), -15) == 0);
    CHECK(mpfr_cmp_si(p.hi(), 10) == 0);
    Interval const m = abs(a);
    CHECK(mpfr_cmp_si(m.lo(), 0) == 0);
    CHECK(mpfr_cmp_si(m.hi(), 3) == 0);
    CHECK(mpfr_cmp_si(abs(-Interval(4L, 64)).lo(), 4) == 0);
}

TEST_CASE("domain errors")
{
    Interval const straddle = Interval::hull(Interval(-1L, 64), Interval(1L, 64));
    CHECK_THROWS_AS(Interval(1L, 64) / straddle, std::domain_error);
    CHECK_THROWS_AS(log(straddle), std::domain_error);
    CHECK_THROWS_AS(sqrt(straddle), std::domain_error);
    CHECK_THROWS_AS(pow(straddle, -2), std::domain_error);
}

TEST_CASE("precision of results is the larger operand precision")
{
    Interval const a(1L, 64);
    Interval const b(1L, 300);
    CHECK((a + b).precision() == 300);
    CHECK((b * a).precision() == 300);
}

TEST_CASE("copy, move and assignment keep the value")
{
    Interval a = Interval::pi(128);
    Interval b = a;
    Interval c = std::move(a);
    CHECK((b - c).contains_zero());
    a = b;
    CHECK((a - c).contains_zero());
    Interval d(10L, 64);
    d = std::move(c);
    CHECK((d - b).contains_zero());
    CHECK(d.precision() == 128);
}

TEST_CASE("huge and tiny magnitudes stay finite")
{
    Interval const x = pow(Interval::from_decimal("0.5", 160), 2000000);
    CHECK(x.is_finite());
    CHECK(certainly_positive(x));
    CHECK(certainly_less(x, Interval::from_decimal("1e-600000", 160)));
}

TEST_CASE("to_string rounds outward")
{
    Interval const third = Interval(1L, 160) / Interval(3L, 160);
    CHECK(third.to_string(5) == "[3.3333e-01, 3.3334e-01]");
}
