#include "shiftconv/gcd_series.hpp"

#include "shiftconv/arith.hpp"
#include "shiftconv/zeta.hpp"

#include <algorithm>
#include <vector>

namespace shiftconv {

namespace {

Complex zeta_continued(const ZetaContext& ctx, const Complex& z) {
    long m = 0;
    if (is_small_int(z, &m)) {
        if (m == 1) throw InvalidParameter("gcd series: zeta factor hits the pole");
        if (m <= 0) return Complex(riemann_zeta_nonpos(m));
    }
    return riemann_zeta(ctx, z);
}

// E_p as an exact rational, integer exponents only
Rational euler_factor_exact(const Integer& p, unsigned vp, long t1, long t2) {
    Rational g(0);
    Rational pw = pow_int(Rational(p), t1 + t2), cur(1);
    for (unsigned i = 1; i <= vp; ++i) {
        cur *= pw;
        g += cur;
    }
    return 1 + (1 - pow_int(Rational(p), -t2)) * g;
}

struct FactorDerivs {
    Complex e;  // E_p
    Complex d1; // dE_p/dt1
    Complex d2; // dE_p/dt2
};

FactorDerivs euler_factor(const ZetaContext& ctx, const Integer& p, unsigned vp,
                          const Complex& t1, const Complex& t2) {
    (void)ctx;
    Real rp = to_real(p), logp = log(rp);
    Complex pw = pow_positive(rp, t1 + t2);
    Complex g(Real(0)), gd(Real(0)), cur(Real(1));
    for (unsigned i = 1; i <= vp; ++i) {
        cur = cur * pw;
        g += cur;
        gd += Complex(Real(i) * logp) * cur;
    }
    Complex pmt2 = pow_positive(rp, -t2);
    Complex lead = Complex(Real(1)) - pmt2;
    FactorDerivs out;
    out.e = Complex(Real(1)) + lead * g;
    out.d1 = lead * gd;
    out.d2 = Complex(logp) * pmt2 * g + lead * gd;
    return out;
}

} // namespace

Complex gcd_series(const ZetaContext& ctx, const Integer& d, const Complex& t1,
                   const Complex& t2) {
    if (d < 1) throw InvalidParameter("gcd_series: d must be positive");
    PrecisionGuard guard(ctx);
    long it1 = 0, it2 = 0;
    if (is_small_int(t1, &it1) && is_small_int(t2, &it2)) {
        if (it1 == -1) throw InvalidParameter("gcd_series: pole at t1 = -1");
        Rational prod(1);
        for (const auto& f : factorize(d)) prod *= euler_factor_exact(f.p, f.exponent, it1, it2);
        if (-it1 <= 0) return Complex(to_real(riemann_zeta_nonpos(-it1) * prod));
        return Complex(riemann_zeta(ctx, Real(-it1)) * to_real(prod));
    }
    Complex z = zeta_continued(ctx, -t1);
    Complex prod(Real(1));
    for (const auto& f : factorize(d)) prod = prod * euler_factor(ctx, f.p, f.exponent, t1, t2).e;
    return z * prod;
}

std::pair<Complex, Complex> gcd_series_partials(const ZetaContext& ctx, const Integer& d,
                                                const Complex& t1, const Complex& t2) {
    if (d < 1) throw InvalidParameter("gcd_series_partials: d must be positive");
    PrecisionGuard guard(ctx);
    long it1 = 0;
    if (is_small_int(t1, &it1) && it1 == -1)
        throw InvalidParameter("gcd_series_partials: pole at t1 = -1");
    Complex z = zeta_continued(ctx, -t1);
    // d/dt1 zeta(-t1) = -zeta'(-t1)
    Complex zd = -riemann_zeta_deriv(ctx, -t1);
    std::vector<FactorDerivs> fs;
    for (const auto& f : factorize(d)) fs.push_back(euler_factor(ctx, f.p, f.exponent, t1, t2));
    size_t m = fs.size();
    // prefix[i] = E_0...E_{i-1}, suffix[i] = E_{i+1}...E_{m-1}
    std::vector<Complex> prefix(m + 1, Complex(Real(1))), suffix(m + 1, Complex(Real(1)));
    for (size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * fs[i].e;
    for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * fs[i].e;
    Complex sum1(Real(0)), sum2(Real(0));
    for (size_t i = 0; i < m; ++i) {
        Complex rest = prefix[i] * suffix[i + 1];
        sum1 += fs[i].d1 * rest;
        sum2 += fs[i].d2 * rest;
    }
    Complex prod = prefix[m];
    return {zd * prod + z * sum1, z * sum2};
}

Complex gcd_pow_dirichlet(const ZetaContext& ctx, const Integer& d, const Complex& s,
                          const Complex& k) {
    return gcd_series(ctx, d, -s - k, k);
}

Complex gcd_log_dirichlet(const ZetaContext& ctx, const Integer& d, const Complex& s) {
    if (d < 1) throw InvalidParameter("gcd_log_dirichlet: d must be positive");
    long m = 0;
    if (is_small_int(s, &m) && m == 1) throw InvalidParameter("gcd_log_dirichlet: pole at s = 1");
    PrecisionGuard guard(ctx);
    if (d == 1) return Complex(Real(0));
    return zeta_continued(ctx, s) * mangoldt_power_sum(ctx, d, -s);
}

Complex gcd_deriv_t1(const ZetaContext& ctx, const Integer& d, const Complex& r) {
    if (d < 1) throw InvalidParameter("gcd_deriv_t1: d must be positive");
    long m = 0;
    if (is_small_int(r, &m) && m == -1) throw InvalidParameter("gcd_deriv_t1: pole at r = -1");
    PrecisionGuard guard(ctx);
    return -riemann_zeta_deriv(ctx, -r);
}

Complex gcd_deriv_t2(const ZetaContext& ctx, const Integer& d, const Complex& r) {
    if (d < 1) throw InvalidParameter("gcd_deriv_t2: d must be positive");
    long m = 0;
    if (is_small_int(r, &m) && m == -1) throw InvalidParameter("gcd_deriv_t2: pole at r = -1");
    PrecisionGuard guard(ctx);
    if (d == 1) return Complex(Real(0));
    return zeta_continued(ctx, -r) * mangoldt_power_sum(ctx, d, r);
}

DirectSeriesValue gcd_series_direct(const ZetaContext& ctx, const Integer& d,
                                    const Complex& t1, const Complex& t2, long cutoff) {
    if (d < 1 || cutoff < 1)
        throw InvalidParameter("gcd_series_direct: need d >= 1 and cutoff >= 1");
    if (!(t1.re < -1) || !(t1.re + t2.re < -1))
        throw InvalidParameter("gcd_series_direct: outside the absolute-convergence region");
    PrecisionGuard guard(ctx);
    std::vector<Integer> divs = divisors(d);
    std::vector<Complex> divpow;
    divpow.reserve(divs.size());
    for (const auto& g : divs) divpow.push_back(pow_positive(to_real(g), t2));
    DirectSeriesValue out;
    out.cutoff = cutoff;
    out.value = Complex(Real(0));
    for (long c = 1; c <= cutoff; ++c) {
        Integer g = gcd(Integer(c), d);
        size_t idx = std::lower_bound(divs.begin(), divs.end(), g) - divs.begin();
        out.value += pow_positive(Real(c), t1) * divpow[idx];
    }
    Real gmax = t2.re > 0 ? pow_positive(to_real(d), t2.re) : Real(1);
    out.tail_bound = gmax * pow_positive(Real(cutoff), t1.re + 1) / (-t1.re - 1);
    return out;
}

} // namespace shiftconv
