#pragma once

// Identity engine for the weighted convolution sums
//
//   LHS(n) = sum_{n1+n2=n, n1 n2 != 0} sigma_{r1}(n1) sigma_{r2}(n2) n2^E (log|n2|)
//
// (the log factor only when with_log). Unfolding sigma over the lattice
// a d - b c = n, with n1 = a d and n2 = -b c, turns the sum into divisor-sum
// kernels weighted by c^{r2} d^{r1}. The evaluators below assemble the
// regularized value of that unfolding:
//
//   theorem1_rhs: term1_finite          -n^P sigma_{r2}(n) zeta(-r1)
//                 term2_d_divides       d | n moduli, gcd Dirichlet series
//                 term3_d_not_divides   d ∤ n moduli up to d_cutoff, Hurwitz
//                                       inner sums against bilateral m-sums
//                 tail_continuation     analytic value of the d > d_cutoff
//                                       plateau (see below)
//
//   theorem2_rhs: term1_finite, term2_d_divides_deriv, term3_d_divides_scale,
//                 term4_d_not_divides_pow, term5_d_not_divides_log,
//                 tail_continuation     log-weighted analogues; the d | n line
//                 splits into a Dirichlet-series derivative part and a
//                 log d / zeta' scale part.
//
// Tail handling: for d ∤ n the per-d value does not decay to zero; it
// approaches n^E sigma_{r2}(n) d^{r1} (times log|n| in the log case), the
// contribution of the a = 0 lattice member that the bilateral m-sum contains
// but the genuine-solution sum excludes. tail_continuation sums that plateau
// over d > d_cutoff in closed form (a Hurwitz zeta in -r1); tail_estimate
// bounds the remaining genuinely-decaying residual from a window calibration.

#include "shiftconv/numbers.hpp"
#include "shiftconv/zeta.hpp"

#include <string>
#include <vector>

namespace shiftconv {

// Parameters of one weighted convolution sum. exponent is P (power weight)
// or Q (log weight); with_log selects the log|n2| factor.
struct ConvolutionSpec {
    long n = 1;
    Complex r1;
    Real r2;
    long exponent = 0;
    bool with_log = false;
};

struct NamedTerm {
    std::string name;
    Complex value;
};

// Term-by-term breakdown of a regularized evaluation. total is the plain sum
// of the named term values in listed order, so reports stay reconcilable.
struct RhsBreakdown {
    std::vector<NamedTerm> terms;
    long d_cutoff = 0;
    Complex total;
    Real tail_estimate; // bound on the residual past tail_continuation; >= 0

    // The truncated d-sum decays only when Re(r1 + r2 + 2 exponent) < -1
    // under the worst-case inner-sum model; false means the report's
    // truncation carries no meaning as an approximation.
    bool term3_converges = true;
    // Inner sums vanish identically (exact arithmetic), so the d ∤ n terms
    // and both tail fields are exact zeros at any cutoff.
    bool vanishing_regime = false;

    const Complex& term(const std::string& name) const;
};

// 1 + e^{i pi x}: exactly 2 at even integers, exactly 0 at odd ones,
// continued in between.
Complex delta_even_continued(const Complex& x);

// Inner sum over residue classes for a non-divisor modulus d:
//
//   sum_{0 < c' <= d, gcd(c',d) | n} zeta(-r2-P, c'/d) gcd(c',d)^{-P} S(-P, u_{c',d})
//
// where S is the bilateral regularized power sum and u_{c',d} the balanced
// lattice offset. Classes are grouped with their reflections d - c' so that
// the Bernoulli reflection cancels the pair bracket exactly (rational
// arithmetic) whenever r2 is an even integer and r2 + P >= 0; the bilateral
// sum is then never evaluated, which also sidesteps its s = 1 pole at P = -1.
// Requires d ∤ n. cache may be null.
Complex vanishing_inner_sum(const ZetaContext& ctx, long n, long d, const Real& r2, long P,
                            HurwitzCache* cache = nullptr);

// Per-modulus building block: sum_c c^{r2} sum_{ad-bc=n, a,b != 0} (bc)^P in
// regularized form. Both branches carry (-1)^{P+1} n^P sigma_{r2}(n) from the
// excluded a = 0 member; d | n adds the gcd Dirichlet series line, d ∤ n adds
// d^{r2+2P} vanishing_inner_sum.
Complex lemma31_term(const ZetaContext& ctx, long n, long d, const Real& r2, long P,
                     HurwitzCache* cache = nullptr);

// Log-weighted analogue: sum_c c^{r2} sum (bc)^Q log|bc|. The d | n branch
// combines the two partial derivatives of the gcd Dirichlet series as
// (d/dt1 - d/dt2) with a log d / zeta' scale line; the d ∤ n branch pairs a
// Hurwitz value/derivative with the bilateral power and log sums.
Complex lemma32_term(const ZetaContext& ctx, long n, long d, const Real& r2, long Q,
                     HurwitzCache* cache = nullptr);

// Full regularized evaluations. spec.with_log must be false for theorem1_rhs
// and true for theorem2_rhs; d_cutoff must be at least the largest divisor
// of |n| so every d > d_cutoff is a non-divisor. Accumulation is in ascending
// d, so results are bit-reproducible at a fixed working precision.
RhsBreakdown theorem1_rhs(const ZetaContext& ctx, const ConvolutionSpec& spec, long d_cutoff,
                          HurwitzCache* cache = nullptr);
RhsBreakdown theorem2_rhs(const ZetaContext& ctx, const ConvolutionSpec& spec, long d_cutoff,
                          HurwitzCache* cache = nullptr);

// Predicted closed forms from the naive interchange of limits, defined only
// on the parameter branches where every remainder term vanishes exactly.
// Hypothesis generators, never ground truth; outside the covered branches
// they throw InvalidParameter("... branch not covered").
//
// Power weight, r2 an even integer with r2 + P >= 0:
//   -n^P sigma_{r2}(n) zeta(-r1) - [r2+P=0] zeta(r2) sigma_{r1}(n)
// Log weight branches:
//   Q >= 1, r2 even integer, r2+Q >= 1: -zeta(-r1) sigma_{r2}(n) n^Q log|n|
//   Q = 0, r1 even integer >= 2, r2 even integer >= 2: sigma_{r1}(n) zeta'(-r2)
//   Q = 0, r1 = r2 = 0: (log|n|/2 - log 2pi) sigma_0(n)
Complex informal_value_pow(const ZetaContext& ctx, long n, const Complex& r1, const Real& r2,
                           long P);
Complex informal_value_log(const ZetaContext& ctx, long n, const Complex& r1, const Real& r2,
                           long Q);

} // namespace shiftconv
