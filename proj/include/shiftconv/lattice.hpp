#pragma once

// Solution families of a d - b c = n and the lattice kernel T_n(c, d).
//
// For g = gcd(c, d) | n the b-values solving the equation form the coset
// b* + (d/g) Z; b* is the minimal-|b| representative with ties broken toward
// positive b*, so u = b* g / d always lands in (-1/2, 1/2]. The kernel
//   T_n(c, d) = sum_m f((m + u) v) - [c|n] f(-n) - [d|n] f(0),   v = c d / g,
// runs over the whole family (the subtractions remove the a = 0 and b = 0
// solutions; when u = 0 the m = 0 term is skipped instead of subtracting the
// singular f(0)).

#include "shiftconv/numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shiftconv {

struct SolutionFamily {
    long n = 0;
    long c = 0, d = 0;
    long g = 0;      // gcd(c, d), divides n
    long b_star = 0; // minimal |b|, tie -> positive
    long a_star = 0; // (n + b_star c) / d
    long step = 0;   // d / g: spacing of the b-coset
    Rational u;      // b_star g / d, in (-1/2, 1/2]; u = 0 iff d | n
    Rational v;      // c d / g, integer-valued
};

// The family for a d - b c = n, or absent when gcd(c,d) does not divide n.
std::optional<SolutionFamily> solution_family(long n, long c, long d);

// All (a, b) with a d - b c = n, a, b nonzero, |b| <= M, sorted by b.
std::vector<std::pair<long, long>> enumerate_solutions(long n, long c, long d, long M);

// T_n(c, d) for f(x) = x^P, resp. f(x) = x^Q log|x|, in regularized form.
// Returns 0 when gcd(c,d) does not divide n. P = -1 (resp. Q = -1 with
// d not dividing n) hits the s = 1 pole of the bilateral sum and throws.
Complex t_pow(const ZetaContext& ctx, long n, long c, long d, long P);
Complex t_pow_log(const ZetaContext& ctx, long n, long c, long d, long Q);

} // namespace shiftconv
