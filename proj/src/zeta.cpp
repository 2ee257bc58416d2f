#include "shiftconv/zeta.hpp"

#include "shiftconv/arith.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace shiftconv {

namespace {

// B_{2j}/(2j)! at the current working precision, cached per precision.
const Real& em_coefficient(unsigned digits, unsigned j) {
    static std::map<unsigned, std::vector<Real>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[digits];
    if (v.empty()) v.push_back(Real(1));
    while (v.size() <= j) {
        unsigned m = static_cast<unsigned>(v.size());
        Integer fact = 1;
        for (unsigned i = 2; i <= 2 * m; ++i) fact *= i;
        v.push_back(to_real(bernoulli_number(2 * m)) / to_real(fact));
    }
    return v[j];
}

double approx_magnitude(const Real& x) {
    double d = x.convert_to<double>();
    return std::abs(d);
}

double approx_magnitude(const Complex& z) {
    return std::max(approx_magnitude(z.re), approx_magnitude(z.im));
}

Real magnitude(const Real& x) { return abs(x); }
Real magnitude(const Complex& z) {
    using boost::multiprecision::abs;
    Real a = abs(z.re), b = abs(z.im);
    return a > b ? a : b;
}

Real real_part(const Real& x) { return x; }
Real real_part(const Complex& z) { return z.re; }

template <class S> struct EmOut {
    S value;
    S deriv;
};

// One Euler-Maclaurin evaluation; precision is already set by the caller.
// Preconditions: a > 0, s != 1.
template <class S> EmOut<S> em_core(const ZetaContext& ctx, const S& s, const Real& a, bool want_deriv) {
    const unsigned digits = ctx.working_digits();
    const Real eps = pow(Real(10), -static_cast<long>(digits));
    const Real sigma = real_part(s);

    long s_int = 0;
    const bool int_s = is_small_int(Complex(s), &s_int);
    auto pow_neg_s = [&](const Real& x) -> S {
        if constexpr (std::is_same_v<S, Real>) {
            if (int_s) {
                Real r;
                mpfr_pow_si(r.backend().data(), x.backend().data(), -s_int, MPFR_RNDN);
                return r;
            }
            return pow(x, -s);
        } else {
            return pow_positive(x, -s);
        }
    };

    const double smag = approx_magnitude(Complex(s));
    unsigned M = std::max<unsigned>(ctx.shift_threshold,
                                    static_cast<unsigned>(1.25 * digits + 0.8 * smag) + 2);

    for (int attempt = 0; attempt < 3; ++attempt, M *= 2) {
        S direct(0), dsum(0);
        for (unsigned m = 0; m < M; ++m) {
            Real base = a + m;
            S t = pow_neg_s(base);
            direct += t;
            if (want_deriv) dsum -= S(log(base)) * t;
        }

        const Real x = a + M;
        const Real L = log(x);
        const S xs = pow_neg_s(x);
        const S sm1 = s - S(1);
        const S head_main = S(x) * xs / sm1; // x^{1-s}/(s-1)
        S value = direct + head_main + xs / S(Real(2));
        S deriv(0);
        // d/ds [x^{1-s}/(s-1)] = x^{1-s} (-L/(s-1) - 1/(s-1)^2), d/ds [x^{-s}/2] = -L x^{-s}/2
        if (want_deriv)
            deriv = dsum + S(x) * xs * (-(S(L) / sm1) - S(1) / (sm1 * sm1)) - S(L) * xs / S(Real(2));

        const Real w = Real(1) / (x * x);
        S t = xs / S(x); // x^{-s-1}
        S poch = s;      // (s)_{2j-1} at j = 1
        S dpoch(1);
        S acc(0), dacc(0);
        Real prev_mag(0);
        bool have_prev = false;
        bool grew = false;

        for (unsigned j = 1; j <= ctx.euler_maclaurin_terms; ++j) {
            const Real& q = em_coefficient(digits, j);
            S term = S(q) * poch * t;
            S dterm(0);
            if (want_deriv) dterm = S(q) * (dpoch * t - poch * t * S(L));
            acc += term;
            if (want_deriv) dacc += dterm;

            // remainder bound is valid once Re s + 2j + 1 > 0
            if (sigma + Real(2 * j + 1) > 0) {
                Real m = magnitude(term);
                if (want_deriv) {
                    Real md = magnitude(dterm);
                    if (md > m) m = md;
                }
                // bound factor |s+2j+1| / (Re s + 2j + 1)
                Real bf = magnitude(s + S(Real(2 * j + 1))) / (sigma + Real(2 * j + 1));
                if (bf < 1) bf = 1;
                Real scale = magnitude(value) + magnitude(acc) + (want_deriv ? magnitude(dsum) : Real(0));
                if (scale < 1) scale = Real(1) + scale;
                if (m * bf <= eps * scale) {
                    EmOut<S> out;
                    out.value = value + acc;
                    out.deriv = want_deriv ? deriv + dacc : S(0);
                    return out;
                }
                if (have_prev && m > prev_mag && j > 4) {
                    grew = true;
                    break;
                }
                prev_mag = m;
                have_prev = true;
            }

            S f1 = s + S(Real(2 * j - 1));
            S f2 = s + S(Real(2 * j));
            if (want_deriv) dpoch = dpoch * (f1 * f2) + poch * (f1 + f2);
            poch = poch * (f1 * f2);
            t = t * S(w);
        }
        (void)grew; // either growth or term-budget exhaustion: retry with larger M
    }
    throw NonConvergence("hurwitz_zeta: Euler-Maclaurin did not converge");
}

template <class S> S hurwitz_dispatch_value(const ZetaContext& ctx, const S& s, const Real& a) {
    if (a <= 0) throw InvalidParameter("hurwitz_zeta: a must be positive");
    long si = 0;
    if (is_small_int(Complex(s), &si)) {
        if (si == 1) throw InvalidParameter("hurwitz_zeta: pole at s = 1");
        if (si <= 0) {
            unsigned k = static_cast<unsigned>(1 - si);
            return S(-bernoulli_poly(k, a) / Real(k));
        }
    }
    return em_core<S>(ctx, s, a, false).value;
}

} // namespace

Rational hurwitz_zeta_nonpos(long s, const Rational& a) {
    if (s > 0) throw InvalidParameter("hurwitz_zeta_nonpos: s must be <= 0");
    unsigned k = static_cast<unsigned>(1 - s);
    return -bernoulli_poly(k, a) / Rational(k);
}

Real hurwitz_zeta_nonpos(long s, const Real& a) {
    if (s > 0) throw InvalidParameter("hurwitz_zeta_nonpos: s must be <= 0");
    unsigned k = static_cast<unsigned>(1 - s);
    return -bernoulli_poly(k, a) / Real(k);
}

Rational riemann_zeta_nonpos(long s) { return hurwitz_zeta_nonpos(s, Rational(1)); }

Real hurwitz_zeta(const ZetaContext& ctx, const Real& s, const Real& a) {
    PrecisionGuard guard(ctx);
    return hurwitz_dispatch_value<Real>(ctx, s, a);
}

Complex hurwitz_zeta(const ZetaContext& ctx, const Complex& s, const Real& a) {
    if (s.is_real()) return Complex(hurwitz_zeta(ctx, s.re, a));
    PrecisionGuard guard(ctx);
    return hurwitz_dispatch_value<Complex>(ctx, s, a);
}

Real hurwitz_zeta_s_deriv(const ZetaContext& ctx, const Real& s, const Real& a) {
    PrecisionGuard guard(ctx);
    if (a <= 0) throw InvalidParameter("hurwitz_zeta: a must be positive");
    long si = 0;
    if (is_small_int(s, &si) && si == 1) throw InvalidParameter("hurwitz_zeta: pole at s = 1");
    return em_core<Real>(ctx, s, a, true).deriv;
}

Complex hurwitz_zeta_s_deriv(const ZetaContext& ctx, const Complex& s, const Real& a) {
    if (s.is_real()) return Complex(hurwitz_zeta_s_deriv(ctx, s.re, a));
    PrecisionGuard guard(ctx);
    if (a <= 0) throw InvalidParameter("hurwitz_zeta: a must be positive");
    return em_core<Complex>(ctx, s, a, true).deriv;
}

void hurwitz_zeta_both(const ZetaContext& ctx, const Real& s, const Real& a, Real* value,
                       Real* deriv) {
    PrecisionGuard guard(ctx);
    if (a <= 0) throw InvalidParameter("hurwitz_zeta: a must be positive");
    long si = 0;
    if (is_small_int(s, &si) && si == 1) throw InvalidParameter("hurwitz_zeta: pole at s = 1");
    EmOut<Real> out = em_core<Real>(ctx, s, a, true);
    if (deriv) *deriv = out.deriv;
    if (value) {
        // keep the exact value when the Bernoulli path applies
        if (is_small_int(s, &si) && si <= 0)
            *value = -bernoulli_poly(static_cast<unsigned>(1 - si), a) / Real(1 - si);
        else
            *value = out.value;
    }
}

Real riemann_zeta(const ZetaContext& ctx, const Real& s) { return hurwitz_zeta(ctx, s, Real(1)); }
Complex riemann_zeta(const ZetaContext& ctx, const Complex& s) {
    return hurwitz_zeta(ctx, s, Real(1));
}
Real riemann_zeta_deriv(const ZetaContext& ctx, const Real& s) {
    return hurwitz_zeta_s_deriv(ctx, s, Real(1));
}
Complex riemann_zeta_deriv(const ZetaContext& ctx, const Complex& s) {
    return hurwitz_zeta_s_deriv(ctx, s, Real(1));
}

void HurwitzCache::clear() {
    std::unique_lock lock(mu_);
    map_.clear();
    digits_ = 0;
}

std::size_t HurwitzCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

bool HurwitzCache::lookup(std::uint64_t key, unsigned digits, Real* value) const {
    std::shared_lock lock(mu_);
    if (digits_ != digits) return false;
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *value = it->second;
    return true;
}

void HurwitzCache::store(std::uint64_t key, unsigned digits, const Real& value) {
    std::unique_lock lock(mu_);
    if (digits_ != digits) {
        map_.clear();
        digits_ = digits;
    }
    if (map_.size() >= max_entries) return;
    map_.emplace(key, value);
}

std::uint64_t HurwitzCache::key(bool deriv, long s, long k, long d) {
    const std::uint64_t ds = static_cast<std::uint64_t>(s + (1L << 20));
    return (static_cast<std::uint64_t>(deriv) << 63) | (ds << 42) |
           (static_cast<std::uint64_t>(k) << 21) | static_cast<std::uint64_t>(d);
}

bool HurwitzCache::key_fits(long s, long k, long d) {
    return s > -(1L << 20) && s < (1L << 20) && k >= 1 && k < (1L << 21) && d >= 1 &&
           d < (1L << 21);
}

Real cached_hurwitz_value(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d) {
    PrecisionGuard guard(ctx); // a = k/d must be formed at working precision
    if (!cache || !HurwitzCache::key_fits(s, k, d))
        return hurwitz_zeta(ctx, Real(s), Real(k) / Real(d));
    const std::uint64_t key = HurwitzCache::key(false, s, k, d);
    Real out;
    if (cache->lookup(key, ctx.working_digits(), &out)) return out;
    out = hurwitz_zeta(ctx, Real(s), Real(k) / Real(d));
    cache->store(key, ctx.working_digits(), out);
    return out;
}

Real cached_hurwitz_deriv(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d) {
    PrecisionGuard guard(ctx);
    if (!cache || !HurwitzCache::key_fits(s, k, d))
        return hurwitz_zeta_s_deriv(ctx, Real(s), Real(k) / Real(d));
    const std::uint64_t key = HurwitzCache::key(true, s, k, d);
    Real out;
    if (cache->lookup(key, ctx.working_digits(), &out)) return out;
    out = hurwitz_zeta_s_deriv(ctx, Real(s), Real(k) / Real(d));
    cache->store(key, ctx.working_digits(), out);
    return out;
}

void cached_hurwitz_both(const ZetaContext& ctx, HurwitzCache* cache, long s, long k, long d,
                         Real* value, Real* deriv) {
    PrecisionGuard guard(ctx);
    if (!cache || !HurwitzCache::key_fits(s, k, d)) {
        hurwitz_zeta_both(ctx, Real(s), Real(k) / Real(d), value, deriv);
        return;
    }
    const unsigned digits = ctx.working_digits();
    const std::uint64_t kv = HurwitzCache::key(false, s, k, d);
    const std::uint64_t kd = HurwitzCache::key(true, s, k, d);
    bool hv = cache->lookup(kv, digits, value);
    bool hd = cache->lookup(kd, digits, deriv);
    if (hv && hd) return;
    Real v, dv;
    hurwitz_zeta_both(ctx, Real(s), Real(k) / Real(d), &v, &dv);
    cache->store(kv, digits, v);
    cache->store(kd, digits, dv);
    *value = v;
    *deriv = dv;
}

} // namespace shiftconv
