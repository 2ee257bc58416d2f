#pragma once

// Regularized bilateral sums over the shifted integer lattice.
//
// S(s, a)  = sum_{m in Z} (m+a)^{-s}            -> zeta(s,a^) + e^{i pi s} zeta(s,1-a^)
// L(s, a)  = sum_{m in Z} (m+a)^{-s} log|m+a|   -> -[d/ds zeta(s,a^) + e^{i pi s} d/ds zeta(s,1-a^)]
//
// where a^ = a mod 1 must land in (0,1); integer a is rejected. The left
// half-lattice m <= -1 contributes through 1-a^ with the factor e^{i pi s}
// ((-1)^{-s} continued on the principal branch). Differentiating each
// (m+a)^{-s} in s brings down -log|m+a|, hence the overall minus sign on L.
//
// Exact shortcuts: S vanishes identically for integer s <= 0 (Bernoulli
// reflection makes the two halves cancel), and integer s >= 2 reduces to a
// polynomial in cot(pi a^). s = 1 is a pole of each half and the two
// continuations disagree there; it is rejected.

#include "shiftconv/numbers.hpp"
#include "shiftconv/zeta.hpp"

namespace shiftconv {

struct RegularizedSumValue {
    enum class Mode { exact, numeric };

    Complex value;
    Mode mode = Mode::numeric;
    Complex s;
    Real a; // reduced representative in (0,1)
};

// S(s, a). Throws InvalidParameter when a is an integer or s = 1.
RegularizedSumValue reg_sum_pow(const ZetaContext& ctx, const Complex& s, const Real& a);

// L(s, a). Same domain as reg_sum_pow.
RegularizedSumValue reg_sum_pow_log(const ZetaContext& ctx, const Complex& s, const Real& a);

// Integer-order fast paths for exact rational shifts, as produced by the
// lattice solution families. The reduced a^ = k/d routes Hurwitz evaluations
// through the shared memo cache (cache may be null).
Complex reg_sum_pow_int(const ZetaContext& ctx, long s, const Rational& a);
Complex reg_sum_pow_log_int(const ZetaContext& ctx, HurwitzCache* cache, long s,
                            const Rational& a);

} // namespace shiftconv
