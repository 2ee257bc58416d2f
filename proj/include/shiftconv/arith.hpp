#pragma once

// Multiplicative number theory helpers: factorization, divisors, divisor
// power sums, the von Mangoldt function, Bernoulli numbers and polynomials.
//
// All inputs are arbitrary-precision integers; factorization uses trial
// division for small factors and Brent's cycle-finding rho for the rest,
// with a probabilistic primality test on each candidate factor.

#include "shiftconv/numbers.hpp"

#include <vector>

namespace shiftconv {

struct PrimePower {
    Integer p;
    unsigned exponent;
};

// Prime factorization of |n|, primes ascending. n must be nonzero.
std::vector<PrimePower> factorize(const Integer& n);

// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

// sigma_nu(n) = sum over positive divisors d of |n| of d^nu, exact for integer nu.
Rational sigma_exact(const Integer& n, long nu);

// sigma_nu(n) for complex nu, evaluated multiplicatively at working precision.
Complex sigma(const ZetaContext& ctx, const Integer& n, const Complex& nu);

// sum over positive divisors c of |n| of c^nu * log(c).
Complex sigma_log(const ZetaContext& ctx, const Integer& n, const Complex& nu);

// von Mangoldt Lambda(m): log p when m = p^k, else 0. m >= 1.
Real von_mangoldt(const ZetaContext& ctx, const Integer& m);

// sum over prime powers l dividing d of Lambda(l) * l^r  (d >= 1).
Complex mangoldt_power_sum(const ZetaContext& ctx, const Integer& d, const Complex& r);

// Bernoulli number B_k with B_1 = -1/2; values are cached.
const Rational& bernoulli_number(unsigned k);

// Bernoulli polynomial B_k(a). The Real overload evaluates at the caller's
// working precision.
Rational bernoulli_poly(unsigned k, const Rational& a);
Real bernoulli_poly(unsigned k, const Real& a);

// Binomial coefficient, n >= 0.
Integer binomial(unsigned long n, unsigned long k);

} // namespace shiftconv
