#pragma once

// Hurwitz zeta engine.
//
// zeta(s, a) = sum_{m>=0} (m+a)^{-s}, continued in s; a > 0. Nonpositive
// integer s is exact: zeta(-k, a) = -B_{k+1}(a)/(k+1). Everything else runs
// through Euler-Maclaurin: M direct terms, the x^{1-s}/(s-1) + x^{-s}/2 head
// at x = M + a, then Bernoulli corrections B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}.
// The s-derivative is tracked termwise through the same recurrence (product
// rule on the Pochhammer factors), which stays finite at integer s <= 0 where
// a naive log-sum form of (s)_{2j-1}' would divide by zero.
//
// The remainder after j correction terms is bounded by the first omitted term
// times |s+2j+1|/(Re s + 2j + 1) once Re s + 2j + 1 > 0; the loop stops when
// that bound clears the working-precision target and retries with a larger
// shift M if the asymptotic terms start growing first.

#include "shiftconv/numbers.hpp"

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>

namespace shiftconv {

// Exact zeta(s, a) for integer s <= 0 via Bernoulli polynomials. The Real
// overload evaluates the same closed form at working precision.
Rational hurwitz_zeta_nonpos(long s, const Rational& a);
Real hurwitz_zeta_nonpos(long s, const Real& a);

// Exact zeta(s) for integer s <= 0.
Rational riemann_zeta_nonpos(long s);

Real hurwitz_zeta(const ZetaContext& ctx, const Real& s, const Real& a);
Complex hurwitz_zeta(const ZetaContext& ctx, const Complex& s, const Real& a);

// d/ds zeta(s, a).
Real hurwitz_zeta_s_deriv(const ZetaContext& ctx, const Real& s, const Real& a);
Complex hurwitz_zeta_s_deriv(const ZetaContext& ctx, const Complex& s, const Real& a);

// Value and s-derivative from one Euler-Maclaurin pass.
void hurwitz_zeta_both(const ZetaContext& ctx, const Real& s, const Real& a, Real* value,
                       Real* deriv);

Real riemann_zeta(const ZetaContext& ctx, const Real& s);
Complex riemann_zeta(const ZetaContext& ctx, const Complex& s);
Real riemann_zeta_deriv(const ZetaContext& ctx, const Real& s);
Complex riemann_zeta_deriv(const ZetaContext& ctx, const Complex& s);

// Memo for zeta(s, k/d) values and s-derivatives at integer s and small
// rational a = k/d. The residue sums in the identity evaluators hit the same
// (s, k, d) triples for every n once the modulus cutoff is fixed, so this
// cache carries most of their cost. Entries are tied to the working precision
// they were computed at; a store with a different precision resets the map.
class HurwitzCache {
  public:
    HurwitzCache() = default;

    void clear();
    std::size_t size() const;
    std::size_t max_entries = 2'000'000;

    bool lookup(std::uint64_t key, unsigned digits, Real* value) const;
    void store(std::uint64_t key, unsigned digits, const Real& value);

    // key layout: bit 63 = derivative flag, bits 42..62 = s + 2^20, bits 21..41 = k, bits 0..20 = d
    static std::uint64_t key(bool deriv, long s, long k, long d);
    static bool key_fits(long s, long k, long d);

  private:
    mutable std::shared_mutex mu_;
    unsigned digits_ = 0;
    std::unordered_map<std::uint64_t, Real> map_;
};

// zeta(s, k/d) with memoization; cache may be null. Requires k, d >= 1.
Real cached_hurwitz_value(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d);
Real cached_hurwitz_deriv(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d);
void cached_hurwitz_both(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d,
                         Real* value, Real* deriv);

} // namespace shiftconv
