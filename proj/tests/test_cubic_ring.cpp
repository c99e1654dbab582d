#include "doctest.h"

#include <random>

#include "normform/cubic_ring.hpp"
#include "normform/errors.hpp"
#include "normform/interval.hpp"
#include "normform/log_bounds.hpp"

using namespace normform;

namespace {

mpz_class random_coefficient(gmp_randclass & rng, unsigned long bits)
{
    mpz_class v = rng.get_z_bits(bits);
    return (rng.get_z_bits(1) == 1) ? mpz_class(-v) : v;
}

RingElement random_element(gmp_randclass & rng, unsigned long bits)
{
    return {random_coefficient(rng, bits), random_coefficient(rng, bits), random_coefficient(rng, bits)};
}

} // namespace

TEST_CASE("ring context rejects t < 2")
{
    CHECK_THROWS_AS(RingContext(1L), InvalidT);
    CHECK_THROWS_AS(RingContext(-5L), InvalidT);
    RingContext const ctx(2L);
    CHECK(ctx.d() == 7);
}

TEST_CASE("mul")
{
    RingContext const ctx(2L);
    SUBCASE("unit times its inverse")
    {
        CHECK(mul({2, -1, 0}, {4, 2, 1}, ctx) == RingElement{1, 0, 0});
    }
    SUBCASE("identity")
    {
        RingElement const u{123, -456, 789};
        CHECK(mul(u, RingElement::one(), ctx) == u);
        CHECK(mul(RingElement::one(), u, ctx) == u);
    }
    SUBCASE("square of (t - s)^2")
    {
        CHECK(mul({4, -4, 1}, {4, -4, 1}, ctx) == RingElement{-40, -25, 24});
    }
    SUBCASE("commutative")
    {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(11);
        RingContext const big(mpz_class("1000000007"));
        for (int i = 0; i < 200; ++i) {
            auto const u = random_element(rng, 80);
            auto const v = random_element(rng, 80);
            CHECK(mul(u, v, big) == mul(v, u, big));
        }
    }
}

TEST_CASE("pow")
{
    RingContext const two(2L);
    RingElement const unit2 = fundamental_unit(two);
    CHECK(pow(unit2, 0, two) == RingElement::one());
    CHECK(pow(unit2, 2, two) == RingElement{4, -4, 1});
    CHECK(pow(unit2, 5, two) == RingElement{-248, -10, 73});

    RingContext const three(3L);
    CHECK(pow(fundamental_unit(three), -1, three) == RingElement{9, 3, 1});

    SUBCASE("negative exponent of a non-unit")
    {
        CHECK_THROWS_AS(pow(RingElement{0, 1, 0}, -1, two), NegativePowerOfNonUnit);
        CHECK_THROWS_AS(pow(RingElement{4, 2, 1}, -3, two), NegativePowerOfNonUnit);
    }

    SUBCASE("exponent additivity for the unit")
    {
        for (long t : {2L, 3L, 7L}) {
            RingContext const ctx(t);
            RingElement const u = fundamental_unit(ctx);
            for (int a = -20; a <= 20; ++a)
                for (int b = -20; b <= 20; ++b)
                    REQUIRE(pow(u, a + b, ctx) == mul(pow(u, a, ctx), pow(u, b, ctx), ctx));
        }
    }
}

TEST_CASE("norm")
{
    RingContext const ctx(2L);
    CHECK(norm({4, -4, 1}, ctx) == 1);
    CHECK(norm({0, 1, 0}, ctx) == 7);
    CHECK(norm({4, 2, 1}, ctx) == 1);
    CHECK(norm(RingElement::one(), ctx) == 1);
    CHECK(norm({-1, 0, 0}, ctx) == -1);

    SUBCASE("multiplicative on random elements with 100-bit coefficients")
    {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(2024);
        for (int i = 0; i < 2000; ++i) {
            RingContext const c(mpz_class(2) + rng.get_z_bits(40));
            auto const u = random_element(rng, 100);
            auto const v = random_element(rng, 100);
            REQUIRE(norm(mul(u, v, c), c) == norm(u, c) * norm(v, c));
        }
    }

    SUBCASE("product over the three complex embeddings")
    {
        /* s -> s, s -> omega s, s -> omega^2 s; the last two are conjugate,
         * so the product is real(u) * |u(omega s)|^2 */
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(7);
        mpfr_prec_t const prec = 512;
        for (int i = 0; i < 300; ++i) {
            long const t = 2 + mpz_class(rng.get_z_range(200)).get_si();
            RingContext const c(t);
            auto const u = random_element(rng, 30);
            Interval const s = real_cube_root(t, prec);
            Interval const a(u.a0, prec), b(u.a1, prec), cc(u.a2, prec);
            Interval const real_embedding = a + b * s + cc * s * s;
            Interval const re = a - (b * s + cc * s * s) / 2;
            Interval const im_over_half_sqrt3 = b * s - cc * s * s; // im = (sqrt3/2) * this
            Interval const modulus2 = re * re + Interval(3L, prec) * im_over_half_sqrt3 * im_over_half_sqrt3 / 4;
            Interval const product = real_embedding * modulus2;
            Interval const exact(norm(u, c), prec);
            REQUIRE((product - exact).contains_zero());
        }
    }
}

TEST_CASE("embedding modulus |t - omega s|^2 = t^2 + s^2 + st")
{
    for (long t = 2; t <= 100; ++t) {
        Interval const s = real_cube_root(t, 256);
        Interval const ti(t, 256);
        /* t - omega s = (t + s/2) - i (sqrt(3)/2) s */
        Interval const re = ti + s / 2;
        Interval const direct = re * re + Interval(3L, 256) * s * s / 4;
        Interval const closed = ti * ti + s * s + s * ti;
        REQUIRE((direct - closed).contains_zero());
        REQUIRE((direct - closed).log2_width() < -200);
    }
}

TEST_CASE("pow_mod_prime")
{
    RingContext const two(2L);
    RingElement const unit = fundamental_unit(two);
    CHECK(pow_mod_prime(unit, 5, two, 101) == ModularRingElement{55, 91, 73, 101});
    CHECK(pow_mod_prime(unit, 2, two, 5) == ModularRingElement{4, 1, 1, 5});
    CHECK(pow_mod_prime(unit, 0, two, 101) == ModularRingElement{1, 0, 0, 101});
    CHECK(pow_mod_prime({5, 6, 7}, 0, RingContext(9L), 4611686018427387847ULL) ==
          ModularRingElement{1, 0, 0, 4611686018427387847ULL});

    SUBCASE("bad moduli")
    {
        CHECK_THROWS_AS(pow_mod_prime(unit, 3, two, 3), BadModulus);
        CHECK_THROWS_AS(pow_mod_prime(unit, 3, two, 2), BadModulus);
        CHECK_THROWS_AS(pow_mod_prime(unit, 3, two, 7), BadModulus); // 7 | t^3 - 1
        CHECK_THROWS_AS(pow_mod_prime(unit, 3, RingContext(4L), 7), BadModulus); // 63
    }

    SUBCASE("agrees with the exact power, m <= 1000")
    {
        std::vector<std::uint64_t> const primes{101, 65537, 1000000007, 2305843009213693951ULL,
                                                4611686018427387847ULL, 9223372036854775783ULL};
        for (long t : {2L, 3L, 5L}) {
            RingContext const ctx(t);
            RingElement const u = fundamental_unit(ctx);
            RingElement exact = RingElement::one();
            for (std::uint64_t m = 0; m <= 1000; ++m) {
                for (auto p : primes)
                    REQUIRE(pow_mod_prime(u, m, ctx, p) == reduce(exact, p));
                exact = mul(exact, u, ctx);
            }
        }
    }
}
