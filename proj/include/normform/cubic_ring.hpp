#pragma once

#include <cstdint>
#include <ostream>

#include <gmpxx.h>

namespace normform {

/* The order Z[s] with s^3 = d = t^3 - 1, for an integer parameter t >= 2. */
class RingContext {
  public:
    /* Throws InvalidT if t < 2. */
    explicit RingContext(mpz_class t);
    explicit RingContext(long t) : RingContext(mpz_class(t)) {}

    mpz_class const & t() const { return t_; }
    mpz_class const & d() const { return d_; }

  private:
    mpz_class t_;
    mpz_class d_;
};

/* a0 + a1*s + a2*s^2. */
struct RingElement {
    mpz_class a0;
    mpz_class a1;
    mpz_class a2;

    static RingElement one() { return {1, 0, 0}; }

    friend bool operator==(RingElement const & u, RingElement const & v)
    {
        return u.a0 == v.a0 && u.a1 == v.a1 && u.a2 == v.a2;
    }
    RingElement operator-() const { return {-a0, -a1, -a2}; }
};

std::ostream & operator<<(std::ostream & os, RingElement const & u);

/* Residues of a ring element modulo a word-sized prime p (p < 2^63). */
struct ModularRingElement {
    std::uint64_t r0 = 0;
    std::uint64_t r1 = 0;
    std::uint64_t r2 = 0;
    std::uint64_t p = 0;

    friend bool operator==(ModularRingElement const &, ModularRingElement const &) = default;
};

/* The fundamental unit t - s and its inverse t^2 + t*s + s^2. */
RingElement fundamental_unit(RingContext const & ctx);
RingElement fundamental_unit_inverse(RingContext const & ctx);

RingElement mul(RingElement const & u, RingElement const & v, RingContext const & ctx);

/* Binary exponentiation. Negative m is only accepted for base t - s, whose
 * inverse is known in closed form; other bases throw NegativePowerOfNonUnit. */
RingElement pow(RingElement const & base, std::int64_t m, RingContext const & ctx);

/* N(a + b s + c s^2) = a^3 + d b^3 + d^2 c^3 - 3 d a b c. */
mpz_class norm(RingElement const & u, RingContext const & ctx);

/* Reduce each coefficient into [0, p). */
ModularRingElement reduce(RingElement const & u, std::uint64_t p);

/* Multiplication in (Z/pZ)[s]/(s^3 - d). `d_mod_p` is d reduced mod p. */
ModularRingElement mul_mod(ModularRingElement const & u, ModularRingElement const & v,
                           std::uint64_t d_mod_p);

/* base^m reduced mod p, in O(log m) modular multiplications. Throws
 * BadModulus if p <= 3, p >= 2^63, or p | d. Primality of p is the caller's
 * responsibility (see primes.hpp). */
ModularRingElement pow_mod_prime(RingElement const & base, std::uint64_t m,
                                 RingContext const & ctx, std::uint64_t p);

} // namespace normform
