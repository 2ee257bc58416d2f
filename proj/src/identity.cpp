#include "shiftconv/identity.hpp"

#include "shiftconv/arith.hpp"
#include "shiftconv/gcd_series.hpp"
#include "shiftconv/lattice.hpp"
#include "shiftconv/regularized.hpp"

#include <deque>
#include <numeric>
#include <optional>
#include <utility>

namespace shiftconv {

namespace {

// zeta(m) at integer m: exact below 1, numeric above, pole at 1.
Complex zeta_at_int(const ZetaContext& ctx, long m) {
    if (m == 1) throw InvalidParameter("zeta_at_int: pole at s = 1");
    if (m <= 0) return Complex(to_real(riemann_zeta_nonpos(m)));
    return Complex(riemann_zeta(ctx, Real(m)));
}

long abs_long(long n) { return (n < 0) ? -n : n; }

std::vector<long> divisor_list(long n) {
    std::vector<long> out;
    for (const Integer& d : divisors(Integer(abs_long(n)))) out.push_back(d.convert_to<long>());
    return out;
}

// sigma_{r2}(|n|), exact when r2 is an integer.
Complex sigma_value(const ZetaContext& ctx, long n, const Real& r2) {
    return sigma(ctx, Integer(abs_long(n)), Complex(r2));
}

struct LogInner {
    Complex pow_part; // S(-Q, u) against log(d^2/g) zeta - zeta'
    Complex log_part; // zeta against S_log(-Q, u)
};

// Residue-class inner sums for the log-weighted kernel at a non-divisor
// modulus d. Classes are folded with their reflections d - x using
// S(s, -u) = (-1)^s S(s, u) (and the same flip for the log sum), so each pair
// costs one bilateral evaluation and the zeta bracket cancels exactly in
// rational arithmetic when r2 is an even integer with r2 + Q >= 0. The
// S(-Q, .) family is identically zero for Q >= 0 and is skipped there.
LogInner log_inner_sums(const ZetaContext& ctx, long n, long d, const Real& r2, long Q,
                        HurwitzCache* cache) {
    long sQ = (Q % 2 == 0) ? 1 : -1;
    long ir2 = 0;
    bool int_r2 = is_small_int(r2, &ir2);
    long s2i = int_r2 ? -ir2 - Q : 0;
    bool exact_zeta = int_r2 && s2i <= 0;
    Real s2r = -r2 - Real(Q);
    bool pow_family = (Q < 0);
    Real half = to_real(Rational(1, 2));
    LogInner out{Complex(0), Complex(0)};
    for (long x = 1; 2 * x <= d; ++x) {
        long g = std::gcd(x, d);
        if (n % g != 0) continue;
        long y = d - x;
        bool self = (x == y);
        Real w = self ? half : Real(1);
        Real gq = to_real(pow_int(Rational(g), -Q));
        Real zx, zy, dzx, dzy;
        bool bracket5_zero = false;
        if (exact_zeta) {
            Rational zxr = hurwitz_zeta_nonpos(s2i, Rational(x, d));
            Rational zyr = self ? zxr : hurwitz_zeta_nonpos(s2i, Rational(y, d));
            Rational br = (sQ == 1) ? zxr + zyr : zxr - zyr;
            bracket5_zero = (br == 0);
            zx = to_real(zxr);
            zy = to_real(zyr);
            if (pow_family) {
                dzx = cached_hurwitz_deriv(ctx, cache, s2i, x, d);
                dzy = self ? dzx : cached_hurwitz_deriv(ctx, cache, s2i, y, d);
            }
        } else if (int_r2) {
            if (pow_family) {
                cached_hurwitz_both(ctx, cache, s2i, x, d, &zx, &dzx);
                if (self) {
                    zy = zx;
                    dzy = dzx;
                } else {
                    cached_hurwitz_both(ctx, cache, s2i, y, d, &zy, &dzy);
                }
            } else {
                zx = cached_hurwitz_value(ctx, cache, s2i, x, d);
                zy = self ? zx : cached_hurwitz_value(ctx, cache, s2i, y, d);
            }
        } else {
            if (pow_family) {
                hurwitz_zeta_both(ctx, s2r, Real(x) / Real(d), &zx, &dzx);
                if (self) {
                    zy = zx;
                    dzy = dzx;
                } else {
                    hurwitz_zeta_both(ctx, s2r, Real(y) / Real(d), &zy, &dzy);
                }
            } else {
                zx = hurwitz_zeta(ctx, s2r, Real(x) / Real(d));
                zy = self ? zx : hurwitz_zeta(ctx, s2r, Real(y) / Real(d));
            }
        }
        std::optional<SolutionFamily> fam;
        Real br5 = (sQ == 1) ? zx + zy : zx - zy;
        if (!bracket5_zero && br5 != 0) {
            fam = solution_family(n, x, d);
            Complex slog = reg_sum_pow_log_int(ctx, cache, -Q, fam->u);
            out.log_part += Complex(w * br5 * gq) * slog;
        }
        if (pow_family) {
            Real big_l = 2 * log(Real(d)) - log(Real(g));
            Real b4x = big_l * zx - dzx;
            Real b4y = big_l * zy - dzy;
            Real br4 = (sQ == 1) ? b4x + b4y : b4x - b4y;
            if (br4 != 0) {
                if (!fam) fam = solution_family(n, x, d);
                Complex spow = reg_sum_pow_int(ctx, -Q, fam->u);
                out.pow_part += Complex(w * br4 * gq) * spow;
            }
        }
    }
    return out;
}

} // namespace

const Complex& RhsBreakdown::term(const std::string& name) const {
    for (const auto& t : terms)
        if (t.name == name) return t.value;
    throw InvalidParameter("RhsBreakdown::term: no term named " + name);
}

Complex delta_even_continued(const Complex& x) { return exp_i_pi(x) + Complex(1); }

Complex vanishing_inner_sum(const ZetaContext& ctx, long n, long d, const Real& r2, long P,
                            HurwitzCache* cache) {
    if (n == 0 || d < 1) throw InvalidParameter("vanishing_inner_sum: need n != 0 and d >= 1");
    if (n % d == 0) throw InvalidParameter("vanishing_inner_sum: d must not divide n");
    PrecisionGuard guard(ctx);
    long sP = (P % 2 == 0) ? 1 : -1;
    long ir2 = 0;
    bool int_r2 = is_small_int(r2, &ir2);
    long s2i = int_r2 ? -ir2 - P : 0;
    bool exact_zeta = int_r2 && s2i <= 0;
    Real s2r = -r2 - Real(P);
    Real half = to_real(Rational(1, 2));
    Complex total(0);
    for (long x = 1; 2 * x <= d; ++x) {
        long g = std::gcd(x, d);
        if (n % g != 0) continue;
        long y = d - x;
        bool self = (x == y);
        Real bracket;
        if (exact_zeta) {
            Rational zx = hurwitz_zeta_nonpos(s2i, Rational(x, d));
            Rational zy = self ? zx : hurwitz_zeta_nonpos(s2i, Rational(y, d));
            Rational br = (sP == 1) ? zx + zy : zx - zy;
            if (br == 0) continue; // exact cancellation; the bilateral sum is never touched
            bracket = to_real(br);
        } else if (int_r2) {
            Real zx = cached_hurwitz_value(ctx, cache, s2i, x, d);
            Real zy = self ? zx : cached_hurwitz_value(ctx, cache, s2i, y, d);
            bracket = (sP == 1) ? zx + zy : zx - zy;
        } else {
            Real zx = hurwitz_zeta(ctx, s2r, Real(x) / Real(d));
            Real zy = self ? zx : hurwitz_zeta(ctx, s2r, Real(y) / Real(d));
            bracket = (sP == 1) ? zx + zy : zx - zy;
        }
        if (bracket == 0) continue;
        Real gp = to_real(pow_int(Rational(g), -P));
        auto fam = solution_family(n, x, d); // g | n, so the family exists
        Complex s_val = reg_sum_pow_int(ctx, -P, fam->u);
        Complex contrib = Complex(bracket * gp) * s_val;
        if (self) contrib = Complex(half) * contrib;
        total += contrib;
    }
    return total;
}

Complex lemma31_term(const ZetaContext& ctx, long n, long d, const Real& r2, long P,
                     HurwitzCache* cache) {
    if (n == 0 || d < 1) throw InvalidParameter("lemma31_term: need n != 0 and d >= 1");
    PrecisionGuard guard(ctx);
    Complex base = Complex(to_real(pow_int(Integer(n), P))) * sigma_value(ctx, n, r2);
    if (P % 2 == 0) base = -base; // (-1)^{P+1}
    if (n % d == 0) {
        if (P % 2 != 0) return base;
        Complex z_p = zeta_at_int(ctx, -P);
        if (z_p.is_zero()) return base;
        Complex f = gcd_series(ctx, Integer(d), Complex(r2 + Real(P)), Complex(-P));
        return base + Complex(2 * to_real(pow_int(Integer(d), P))) * z_p * f;
    }
    Complex inner = vanishing_inner_sum(ctx, n, d, r2, P, cache);
    return base + Complex(pow_positive(Real(d), r2 + Real(2 * P))) * inner;
}

Complex lemma32_term(const ZetaContext& ctx, long n, long d, const Real& r2, long Q,
                     HurwitzCache* cache) {
    if (n == 0 || d < 1) throw InvalidParameter("lemma32_term: need n != 0 and d >= 1");
    PrecisionGuard guard(ctx);
    long an = abs_long(n);
    Complex base =
        Complex(to_real(pow_int(Integer(n), Q)) * log(Real(an))) * sigma_value(ctx, n, r2);
    if (Q % 2 == 0) base = -base; // (-1)^{Q+1}
    if (n % d == 0) {
        if (Q % 2 != 0) return base;
        Complex z_q = zeta_at_int(ctx, -Q);
        Real z_qd = riemann_zeta_deriv(ctx, Real(-Q));
        Complex t1(r2 + Real(Q));
        Complex t2(-Q);
        Complex f = gcd_series(ctx, Integer(d), t1, t2);
        Complex line = (Complex(log(Real(d))) * z_q - Complex(z_qd)) * f;
        if (!z_q.is_zero()) {
            auto [p1, p2] = gcd_series_partials(ctx, Integer(d), t1, t2);
            line += z_q * (p1 - p2);
        }
        return base + Complex(2 * to_real(pow_int(Integer(d), Q))) * line;
    }
    LogInner inner = log_inner_sums(ctx, n, d, r2, Q, cache);
    return base + Complex(pow_positive(Real(d), r2 + Real(2 * Q))) * (inner.pow_part + inner.log_part);
}

RhsBreakdown theorem1_rhs(const ZetaContext& ctx, const ConvolutionSpec& spec, long d_cutoff,
                          HurwitzCache* cache) {
    if (spec.with_log) throw InvalidParameter("theorem1_rhs: spec.with_log must be false");
    if (spec.n == 0) throw InvalidParameter("theorem1_rhs: n must be nonzero");
    long an = abs_long(spec.n);
    if (d_cutoff < an)
        throw InvalidParameter("theorem1_rhs: d_cutoff must cover every divisor of |n|");
    long m1 = 0;
    if (is_small_int(spec.r1, &m1) && m1 == -1)
        throw InvalidParameter("theorem1_rhs: zeta(-r1) pole at r1 = -1");
    PrecisionGuard guard(ctx);
    long P = spec.exponent;
    long n = spec.n;

    Complex sig = sigma_value(ctx, n, spec.r2);
    Complex n_pow = Complex(to_real(pow_int(Integer(n), P)));
    Complex term1 = -(n_pow * sig * riemann_zeta(ctx, -spec.r1));

    Complex term2(0);
    if (P % 2 == 0) {
        Complex z_p = zeta_at_int(ctx, -P);
        if (!z_p.is_zero()) {
            Complex acc(0);
            for (long dd : divisor_list(n))
                acc += pow_positive(Real(dd), spec.r1 + Real(P)) *
                       gcd_series(ctx, Integer(dd), Complex(spec.r2 + Real(P)), Complex(-P));
            term2 = Complex(2) * z_p * acc;
        }
    }

    long ir2 = 0;
    bool int_r2 = is_small_int(spec.r2, &ir2);
    bool vanishing = int_r2 && ir2 % 2 == 0 && ir2 + P >= 0;
    bool conv_ok =
        P <= -2 && spec.r2 + Real(P) < Real(-1) && spec.r1.re < Real(-1);

    Complex term3(0), tail_cont(0);
    Real tail_estimate(0);
    if (!vanishing) {
        Complex plateau = n_pow * sig; // per-d limit of the d-sum summand, over d^{r1}
        Real gamma = spec.r1.re + Real(P);
        auto summand = [&](long dd) {
            Complex contrib = Complex(pow_positive(Real(dd), spec.r1 + spec.r2 + Real(2 * P))) *
                              vanishing_inner_sum(ctx, n, dd, spec.r2, P, cache);
            if (P % 2 != 0) contrib = -contrib;
            return contrib;
        };
        auto resid_scale = [&](const Complex& contrib, long dd) {
            Complex resid = contrib - plateau * pow_positive(Real(dd), spec.r1);
            return abs(resid) * pow_positive(Real(dd), -gamma);
        };
        std::deque<Real> window;
        for (long dd = 1; dd <= d_cutoff; ++dd) {
            if (n % dd == 0) continue;
            Complex contrib = summand(dd);
            term3 += contrib;
            if (conv_ok) {
                window.push_back(resid_scale(contrib, dd));
                if (window.size() > 32) window.pop_front();
            }
        }
        if (conv_ok) {
            tail_cont = plateau * hurwitz_zeta(ctx, -spec.r1, Real(d_cutoff + 1));
            if (window.empty()) {
                long probe = d_cutoff + 1;
                while (n % probe == 0) ++probe;
                window.push_back(resid_scale(summand(probe), probe));
            }
            Real c_win(0);
            for (const Real& w : window)
                if (w > c_win) c_win = w;
            tail_estimate = Real(3) * c_win * hurwitz_zeta(ctx, -gamma, Real(d_cutoff + 1)) / 2;
        }
    }

    RhsBreakdown out;
    out.terms = {{"term1_finite", term1},
                 {"term2_d_divides", term2},
                 {"term3_d_not_divides", term3},
                 {"tail_continuation", tail_cont}};
    out.d_cutoff = d_cutoff;
    out.total = term1 + term2 + term3 + tail_cont;
    out.tail_estimate = tail_estimate;
    out.term3_converges = spec.r1.re + spec.r2 + Real(2 * P) < Real(-1);
    out.vanishing_regime = vanishing;
    return out;
}

RhsBreakdown theorem2_rhs(const ZetaContext& ctx, const ConvolutionSpec& spec, long d_cutoff,
                          HurwitzCache* cache) {
    if (!spec.with_log) throw InvalidParameter("theorem2_rhs: spec.with_log must be true");
    if (spec.n == 0) throw InvalidParameter("theorem2_rhs: n must be nonzero");
    long an = abs_long(spec.n);
    if (d_cutoff < an)
        throw InvalidParameter("theorem2_rhs: d_cutoff must cover every divisor of |n|");
    long m1 = 0;
    if (is_small_int(spec.r1, &m1) && m1 == -1)
        throw InvalidParameter("theorem2_rhs: zeta(-r1) pole at r1 = -1");
    PrecisionGuard guard(ctx);
    long Q = spec.exponent;
    long n = spec.n;

    Complex sig = sigma_value(ctx, n, spec.r2);
    Complex n_pow = Complex(to_real(pow_int(Integer(n), Q)));
    Real log_n = log(Real(an));
    Complex term1 = -(riemann_zeta(ctx, -spec.r1) * sig * n_pow * Complex(log_n));

    Complex term2(0), term3(0);
    if (Q % 2 == 0) {
        Complex z_q = zeta_at_int(ctx, -Q);
        Real z_qd = riemann_zeta_deriv(ctx, Real(-Q));
        Complex t1(spec.r2 + Real(Q));
        Complex t2(-Q);
        for (long dd : divisor_list(n)) {
            Complex dpow = pow_positive(Real(dd), spec.r1 + Real(Q));
            Complex f = gcd_series(ctx, Integer(dd), t1, t2);
            term3 += dpow * (Complex(log(Real(dd))) * z_q - Complex(z_qd)) * f;
            if (!z_q.is_zero()) {
                auto [p1, p2] = gcd_series_partials(ctx, Integer(dd), t1, t2);
                term2 += dpow * (p1 - p2);
            }
        }
        term2 = Complex(2) * z_q * term2;
        term3 = Complex(2) * term3;
    }

    long ir2 = 0;
    bool int_r2 = is_small_int(spec.r2, &ir2);
    bool vanishing = Q >= 0 && int_r2 && ir2 % 2 == 0 && ir2 + Q >= 0;
    bool conv_ok =
        Q <= -2 && spec.r2 + Real(Q) < Real(-1) && spec.r1.re < Real(-1);

    Complex term4(0), term5(0), tail_cont(0);
    Real tail_estimate(0);
    if (!vanishing) {
        Complex plateau = n_pow * sig * Complex(log_n);
        Real gamma = spec.r1.re + Real(Q);
        auto summands = [&](long dd) {
            LogInner inner = log_inner_sums(ctx, n, dd, spec.r2, Q, cache);
            Complex dfac = Complex(pow_positive(Real(dd), spec.r1 + spec.r2 + Real(2 * Q)));
            Complex c4 = dfac * inner.pow_part;
            Complex c5 = dfac * inner.log_part;
            if (Q % 2 != 0) {
                c4 = -c4;
                c5 = -c5;
            }
            return std::pair<Complex, Complex>{c4, c5};
        };
        auto resid_scale = [&](const Complex& c4, const Complex& c5, long dd) {
            Complex resid = c4 + c5 - plateau * pow_positive(Real(dd), spec.r1);
            return abs(resid) * pow_positive(Real(dd), -gamma) / log(Real(dd));
        };
        std::deque<Real> window;
        for (long dd = 1; dd <= d_cutoff; ++dd) {
            if (n % dd == 0) continue;
            auto [c4, c5] = summands(dd);
            term4 += c4;
            term5 += c5;
            if (conv_ok) {
                window.push_back(resid_scale(c4, c5, dd));
                if (window.size() > 32) window.pop_front();
            }
        }
        if (conv_ok) {
            tail_cont = plateau * hurwitz_zeta(ctx, -spec.r1, Real(d_cutoff + 1));
            if (window.empty()) {
                long probe = d_cutoff + 1;
                while (n % probe == 0) ++probe;
                auto [c4, c5] = summands(probe);
                window.push_back(resid_scale(c4, c5, probe));
            }
            Real c_win(0);
            for (const Real& w : window)
                if (w > c_win) c_win = w;
            Real tail_ref = -hurwitz_zeta_s_deriv(ctx, Real(-gamma), Real(d_cutoff + 1));
            tail_estimate = Real(3) * c_win * tail_ref / 2;
        }
    }

    RhsBreakdown out;
    out.terms = {{"term1_finite", term1},
                 {"term2_d_divides_deriv", term2},
                 {"term3_d_divides_scale", term3},
                 {"term4_d_not_divides_pow", term4},
                 {"term5_d_not_divides_log", term5},
                 {"tail_continuation", tail_cont}};
    out.d_cutoff = d_cutoff;
    out.total = term1 + term2 + term3 + term4 + term5 + tail_cont;
    out.tail_estimate = tail_estimate;
    out.term3_converges = spec.r1.re + spec.r2 + Real(2 * Q) < Real(-1);
    out.vanishing_regime = vanishing;
    return out;
}

Complex informal_value_pow(const ZetaContext& ctx, long n, const Complex& r1, const Real& r2,
                           long P) {
    if (n == 0) throw InvalidParameter("informal_value_pow: n must be nonzero");
    long ir2 = 0;
    if (!is_small_int(r2, &ir2) || ir2 % 2 != 0 || ir2 + P < 0)
        throw InvalidParameter("informal_value_pow: branch not covered");
    long m1 = 0;
    if (is_small_int(r1, &m1) && m1 == -1)
        throw InvalidParameter("informal_value_pow: zeta(-r1) pole at r1 = -1");
    PrecisionGuard guard(ctx);
    long an = abs_long(n);
    Complex val = -(Complex(to_real(pow_int(Integer(n), P))) *
                    sigma(ctx, Integer(an), Complex(r2)) * riemann_zeta(ctx, -r1));
    if (ir2 + P == 0) val = val - zeta_at_int(ctx, ir2) * sigma(ctx, Integer(an), r1);
    return val;
}

Complex informal_value_log(const ZetaContext& ctx, long n, const Complex& r1, const Real& r2,
                           long Q) {
    if (n == 0) throw InvalidParameter("informal_value_log: n must be nonzero");
    long ir2 = 0;
    bool int_r2 = is_small_int(r2, &ir2);
    long ir1 = 0;
    bool int_r1 = is_small_int(r1, &ir1);
    PrecisionGuard guard(ctx);
    long an = abs_long(n);
    if (Q >= 1 && int_r2 && ir2 % 2 == 0 && ir2 + Q >= 1) {
        if (int_r1 && ir1 == -1)
            throw InvalidParameter("informal_value_log: zeta(-r1) pole at r1 = -1");
        return -(riemann_zeta(ctx, -r1) * sigma(ctx, Integer(an), Complex(r2)) *
                 Complex(to_real(pow_int(Integer(n), Q)) * log(Real(an))));
    }
    if (Q == 0 && int_r1 && ir1 >= 2 && ir1 % 2 == 0 && int_r2 && ir2 >= 2 && ir2 % 2 == 0)
        return sigma(ctx, Integer(an), r1) * Complex(riemann_zeta_deriv(ctx, Real(-ir2)));
    if (Q == 0 && int_r1 && ir1 == 0 && int_r2 && ir2 == 0) {
        Real v = log(Real(an)) / 2 - log(2 * pi_real());
        return Complex(v * to_real(sigma_exact(Integer(an), 0)));
    }
    throw InvalidParameter("informal_value_log: branch not covered");
}

} // namespace shiftconv
