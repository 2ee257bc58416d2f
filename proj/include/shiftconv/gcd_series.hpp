#pragma once

// Dirichlet series weighted by gcd(c, d):
//
//   F(d; t1, t2) = sum_{c >= 1} c^{t1} gcd(c, d)^{t2}
//                = zeta(-t1) prod_{p | d} E_p,
//   E_p = 1 + (1 - p^{-t2}) (p^w + p^{2w} + ... + p^{v_p(d) w}),  w = t1 + t2.
//
// The product is a finite polynomial in p^{+-t1}, p^{+-t2}, so F continues
// meromorphically with its only pole at t1 = -1; every operation below uses
// continuation semantics. gcd_pow_dirichlet exposes the same function in the
// (s, k) coordinates t1 = -s-k, t2 = k, where the factor reads
// 1 + (1 - p^{-k})(p^{-s} + ... + p^{-v_p(d) s}).

#include "shiftconv/numbers.hpp"

#include <utility>

namespace shiftconv {

// F(d; t1, t2). Exact rational Euler factors (and exact zeta at nonpositive
// integer -t1) when both exponents are integers. Throws at t1 = -1.
Complex gcd_series(const ZetaContext& ctx, const Integer& d, const Complex& t1,
                   const Complex& t2);

// (d/dt1 F, d/dt2 F) at general (t1, t2); closed-form product rule with
// leave-one-out products over the Euler factors. Throws at t1 = -1.
std::pair<Complex, Complex> gcd_series_partials(const ZetaContext& ctx, const Integer& d,
                                                const Complex& t1, const Complex& t2);

// sum_c gcd(c,d)^k / c^{s+k}. Pole at s + k = 1; exactly -d^k/2 at s + k = 0
// and exactly 0 at negative even s + k.
Complex gcd_pow_dirichlet(const ZetaContext& ctx, const Integer& d, const Complex& s,
                          const Complex& k);

// sum_c log(gcd(c,d)) / c^s = zeta(s) sum_{l | d} Lambda(l) l^{-s}. Pole at s = 1.
Complex gcd_log_dirichlet(const ZetaContext& ctx, const Integer& d, const Complex& s);

// Partials of F at (t1, t2) = (r, 0): -zeta'(-r), resp.
// zeta(-r) sum_{l | d} Lambda(l) l^r. Throw at r = -1.
Complex gcd_deriv_t1(const ZetaContext& ctx, const Integer& d, const Complex& r);
Complex gcd_deriv_t2(const ZetaContext& ctx, const Integer& d, const Complex& r);

struct DirectSeriesValue {
    Complex value;   // sum_{c <= cutoff} c^{t1} gcd(c, d)^{t2}
    Real tail_bound; // max(1, d^{Re t2}) * cutoff^{Re t1 + 1} / (-Re t1 - 1)
    long cutoff = 0;
};

// Truncated direct sum, the oracle for the closed forms above. Requires the
// absolute-convergence region Re t1 < -1 and Re(t1 + t2) < -1.
DirectSeriesValue gcd_series_direct(const ZetaContext& ctx, const Integer& d,
                                    const Complex& t1, const Complex& t2, long cutoff);

} // namespace shiftconv
