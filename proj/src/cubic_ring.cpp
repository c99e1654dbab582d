#include "normform/cubic_ring.hpp"

#include <fmt/format.h>

#include "normform/errors.hpp"

namespace normform {

RingContext::RingContext(mpz_class t)
    : t_(std::move(t))
{
    if (t_ < 2)
        throw InvalidT(fmt::format("ring parameter t must be >= 2, got {}", t_.get_str()));
    d_ = t_ * t_ * t_ - 1;
}

std::ostream & operator<<(std::ostream & os, RingElement const & u)
{
    return os << "(" << u.a0 << ", " << u.a1 << ", " << u.a2 << ")";
}

RingElement fundamental_unit(RingContext const & ctx)
{
    return {ctx.t(), -1, 0};
}

RingElement fundamental_unit_inverse(RingContext const & ctx)
{
    return {ctx.t() * ctx.t(), ctx.t(), 1};
}

RingElement mul(RingElement const & u, RingElement const & v, RingContext const & ctx)
{
    mpz_class const & d = ctx.d();
    RingElement w;
    w.a0 = u.a0 * v.a0 + d * (u.a1 * v.a2 + u.a2 * v.a1);
    w.a1 = u.a0 * v.a1 + u.a1 * v.a0 + d * (u.a2 * v.a2);
    w.a2 = u.a0 * v.a2 + u.a1 * v.a1 + u.a2 * v.a0;
    return w;
}

RingElement pow(RingElement const & base, std::int64_t m, RingContext const & ctx)
{
    RingElement b = base;
    if (m < 0) {
        if (!(base == fundamental_unit(ctx)))
            throw NegativePowerOfNonUnit(fmt::format(
                "negative exponent {} requires base t - s (t = {})", m, ctx.t().get_str()));
        b = fundamental_unit_inverse(ctx);
    }
    /* |INT64_MIN| does not fit; go through unsigned. */
    std::uint64_t e = m < 0 ? std::uint64_t(0) - std::uint64_t(m) : std::uint64_t(m);
    RingElement acc = RingElement::one();
    while (e) {
        if (e & 1)
            acc = mul(acc, b, ctx);
        e >>= 1;
        if (e)
            b = mul(b, b, ctx);
    }
    return acc;
}

mpz_class norm(RingElement const & u, RingContext const & ctx)
{
    mpz_class const & d = ctx.d();
    mpz_class const & a = u.a0;
    mpz_class const & b = u.a1;
    mpz_class const & c = u.a2;
    mpz_class r = a * a * a + d * b * b * b + d * d * c * c * c - 3 * d * a * b * c;
    return r;
}

namespace {

std::uint64_t mod_of(mpz_class const & x, std::uint64_t p)
{
    mpz_class r;
    mpz_class const pp(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
    return r.get_ui();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    /* a, b < p < 2^63, so no wraparound */
    std::uint64_t r = a + b;
    return r >= p ? r - p : r;
}

} // namespace

ModularRingElement reduce(RingElement const & u, std::uint64_t p)
{
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected for mpz_class");
    return {mod_of(u.a0, p), mod_of(u.a1, p), mod_of(u.a2, p), p};
}

ModularRingElement mul_mod(ModularRingElement const & u, ModularRingElement const & v,
                           std::uint64_t d_mod_p)
{
    std::uint64_t const p = u.p;
    ModularRingElement w;
    w.p = p;
    std::uint64_t cross = addmod(mulmod(u.r1, v.r2, p), mulmod(u.r2, v.r1, p), p);
    w.r0 = addmod(mulmod(u.r0, v.r0, p), mulmod(d_mod_p, cross, p), p);
    w.r1 = addmod(addmod(mulmod(u.r0, v.r1, p), mulmod(u.r1, v.r0, p), p),
                  mulmod(d_mod_p, mulmod(u.r2, v.r2, p), p), p);
    w.r2 = addmod(addmod(mulmod(u.r0, v.r2, p), mulmod(u.r1, v.r1, p), p),
                  mulmod(u.r2, v.r0, p), p);
    return w;
}

ModularRingElement pow_mod_prime(RingElement const & base, std::uint64_t m,
                                 RingContext const & ctx, std::uint64_t p)
{
    if (p <= 3 || p >= (std::uint64_t(1) << 63))
        throw BadModulus(fmt::format("modulus {} outside (3, 2^63)", p));
    std::uint64_t const d_mod_p = mod_of(ctx.d(), p);
    if (d_mod_p == 0)
        throw BadModulus(fmt::format("modulus {} divides t^3 - 1 = {}", p, ctx.d().get_str()));

    ModularRingElement b = reduce(base, p);
    ModularRingElement acc{1 % p, 0, 0, p};
    while (m) {
        if (m & 1)
            acc = mul_mod(acc, b, d_mod_p);
        m >>= 1;
        if (m)
            b = mul_mod(b, b, d_mod_p);
    }
    return acc;
}

} // namespace normform
