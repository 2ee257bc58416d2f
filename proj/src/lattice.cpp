#include "shiftconv/lattice.hpp"

#include "shiftconv/regularized.hpp"
#include "shiftconv/zeta.hpp"

#include <numeric>

namespace shiftconv {

namespace {

// x g c d(c, d) with c, d > 0: returns g and x with x c = g (mod d).
long modular_inverse_times(long value, long c, long d) {
    // solve t c = value (mod d) given gcd(c, d) | value
    long old_r = c % d, r = d;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    // old_r = gcd, old_s c = old_r (mod d)
    long t = static_cast<long>((static_cast<long long>(old_s) * (value / old_r)) % d);
    return t;
}

Real zeta_at_minus(const ZetaContext& ctx, long e) {
    // zeta(-e) for integer e != -1
    if (e >= 0) return to_real(riemann_zeta_nonpos(-e));
    return riemann_zeta(ctx, Real(-e));
}

} // namespace

std::optional<SolutionFamily> solution_family(long n, long c, long d) {
    if (n == 0 || c < 1 || d < 1) throw InvalidParameter("solution_family: need n != 0, c, d >= 1");
    long g = std::gcd(c, d);
    if (n % g != 0) return std::nullopt;
    SolutionFamily f;
    f.n = n;
    f.c = c;
    f.d = d;
    f.g = g;
    f.step = d / g;
    // b c = -n (mod d)  <=>  b (c/g) = -(n/g) (mod d/g)
    long rhs = (-(n / g)) % f.step;
    if (rhs < 0) rhs += f.step;
    long b0 = modular_inverse_times(rhs, c / g, f.step);
    b0 %= f.step;
    if (b0 < 0) b0 += f.step;
    // balanced representative in (-step/2, step/2], tie toward positive
    f.b_star = (2 * b0 <= f.step) ? b0 : b0 - f.step;
    f.a_star = (n + f.b_star * c) / d;
    f.u = Rational(f.b_star, f.step);
    f.v = Rational(c) * Rational(d) / Rational(g);
    return f;
}

std::vector<std::pair<long, long>> enumerate_solutions(long n, long c, long d, long M) {
    if (n == 0 || c < 1 || d < 1 || M < 1)
        throw InvalidParameter("enumerate_solutions: need n != 0, c, d >= 1, M >= 1");
    std::vector<std::pair<long, long>> out;
    for (long b = -M; b <= M; ++b) {
        if (b == 0) continue;
        long long num = static_cast<long long>(n) + static_cast<long long>(b) * c;
        if (num % d != 0) continue;
        long a = static_cast<long>(num / d);
        if (a == 0) continue;
        out.emplace_back(a, b);
    }
    return out;
}

Complex t_pow(const ZetaContext& ctx, long n, long c, long d, long P) {
    auto fam = solution_family(n, c, d);
    if (!fam) return Complex(Real(0));
    PrecisionGuard guard(ctx);
    Real vP = to_real(pow_int(fam->v, P));
    Complex total(Real(0));
    if (fam->b_star == 0) {
        // d | n: sum over m != 0 collapses by parity to 2 [P even] zeta(-P) v^P
        if (P % 2 == 0) total += Complex(2 * zeta_at_minus(ctx, P) * vP);
    } else {
        total += Complex(vP) * reg_sum_pow_int(ctx, -P, fam->u);
    }
    if (n % c == 0) total -= Complex(to_real(pow_int(Integer(-n), P)));
    return total;
}

Complex t_pow_log(const ZetaContext& ctx, long n, long c, long d, long Q) {
    auto fam = solution_family(n, c, d);
    if (!fam) return Complex(Real(0));
    PrecisionGuard guard(ctx);
    Real vQ = to_real(pow_int(fam->v, Q));
    Real logv = log(to_real(fam->v));
    Complex total(Real(0));
    if (fam->b_star == 0) {
        // sum_{m != 0} (m v)^Q log|m v| = 2 [Q even] v^Q (zeta(-Q) log v - zeta'(-Q))
        if (Q % 2 == 0) {
            Real zq = zeta_at_minus(ctx, Q);
            Real dzq = riemann_zeta_deriv(ctx, Real(-Q));
            total += Complex(2 * vQ * (zq * logv - dzq));
        }
    } else {
        Complex spow = reg_sum_pow_int(ctx, -Q, fam->u);
        Complex slog = reg_sum_pow_log_int(ctx, nullptr, -Q, fam->u);
        total += Complex(vQ) * (Complex(logv) * spow + slog);
    }
    if (n % c == 0) {
        Real nn((n < 0) ? -n : n);
        total -= Complex(to_real(pow_int(Integer(-n), Q)) * log(nn));
    }
    return total;
}

} // namespace shiftconv
