#include "shiftconv/regularized.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace shiftconv {

namespace {

Real reduce_mod1(const Real& a) {
    Real ahat = a - floor(a);
    if (ahat.is_zero()) throw InvalidParameter("regularized sum: shift a must not be an integer");
    return ahat;
}

// q_s with S(s, a) = pi^s q_s(cot(pi a)) for integer s >= 2.
// q_2 = 1 + c^2 and s q_{s+1} = (1 + c^2) q_s' (differentiate the bilateral
// sum in a; d/da cot(pi a) = -pi (1 + cot^2)). Indexed by power of c.
std::vector<Rational> cot_poly(unsigned s) {
    static std::vector<std::vector<Rational>> table{{Rational(1), Rational(0), Rational(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() < s - 1) {
        const auto& q = table.back();
        auto k = static_cast<long>(table.size()) + 1; // q = q_k
        std::vector<Rational> next(q.size() + 1, Rational(0));
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            Rational dq = Rational(static_cast<long>(j + 1)) * q[j + 1] / Rational(k);
            next[j] += dq;
            next[j + 2] += dq;
        }
        table.push_back(std::move(next));
    }
    return table[s - 2];
}

Real cot_closed_form(long s, const Real& ahat) {
    Real pi = pi_real();
    Real c = cos(pi * ahat) / sin(pi * ahat);
    Real acc(0), cp(1);
    for (const Rational& coeff : cot_poly(static_cast<unsigned>(s))) {
        if (coeff != 0) acc += to_real(coeff) * cp;
        cp *= c;
    }
    return pow_positive(pi, Real(s)) * acc;
}

} // namespace

RegularizedSumValue reg_sum_pow(const ZetaContext& ctx, const Complex& s, const Real& a) {
    PrecisionGuard guard(ctx);
    Real ahat = reduce_mod1(a);
    long si = 0;
    if (is_small_int(s, &si)) {
        if (si == 1) throw InvalidParameter("reg_sum_pow: pole at s = 1");
        if (si <= 0) {
            // zeta(s,a^) + (-1)^s zeta(s,1-a^) with Bernoulli reflection
            // B_k(1-a) = (-1)^k B_k(a): the halves cancel identically.
            return {Complex(Real(0)), RegularizedSumValue::Mode::exact, s, ahat};
        }
        return {Complex(cot_closed_form(si, ahat)), RegularizedSumValue::Mode::numeric, s, ahat};
    }
    Complex z1 = hurwitz_zeta(ctx, s, ahat);
    Complex z2 = hurwitz_zeta(ctx, s, Real(1 - ahat));
    return {z1 + exp_i_pi(s) * z2, RegularizedSumValue::Mode::numeric, s, ahat};
}

RegularizedSumValue reg_sum_pow_log(const ZetaContext& ctx, const Complex& s, const Real& a) {
    PrecisionGuard guard(ctx);
    Real ahat = reduce_mod1(a);
    long si = 0;
    if (is_small_int(s, &si) && si == 1)
        throw InvalidParameter("reg_sum_pow_log: pole at s = 1");
    Complex d1 = hurwitz_zeta_s_deriv(ctx, s, ahat);
    Complex d2 = hurwitz_zeta_s_deriv(ctx, s, Real(1 - ahat));
    return {-(d1 + exp_i_pi(s) * d2), RegularizedSumValue::Mode::numeric, s, ahat};
}

Complex reg_sum_pow_int(const ZetaContext& ctx, long s, const Rational& a) {
    Rational ahat = frac_part(a);
    if (ahat == 0) throw InvalidParameter("reg_sum_pow_int: shift a must not be an integer");
    if (s == 1) throw InvalidParameter("reg_sum_pow_int: pole at s = 1");
    if (s <= 0) return Complex(Real(0));
    PrecisionGuard guard(ctx);
    return Complex(cot_closed_form(s, to_real(ahat)));
}

Complex reg_sum_pow_log_int(const ZetaContext& ctx, HurwitzCache* cache, long s,
                            const Rational& a) {
    Rational ahat = frac_part(a);
    if (ahat == 0) throw InvalidParameter("reg_sum_pow_log_int: shift a must not be an integer");
    if (s == 1) throw InvalidParameter("reg_sum_pow_log_int: pole at s = 1");
    PrecisionGuard guard(ctx);
    Integer num = numerator(ahat), den = denominator(ahat);
    if (den > 1'000'000'000) {
        RegularizedSumValue v = reg_sum_pow_log(ctx, Complex(Real(s)), to_real(ahat));
        return v.value;
    }
    long k = num.convert_to<long>();
    long d = den.convert_to<long>();
    Real d1 = cached_hurwitz_deriv(ctx, cache, s, k, d);
    Real d2 = cached_hurwitz_deriv(ctx, cache, s, d - k, d);
    Real sign = (s % 2 == 0) ? Real(1) : Real(-1);
    return Complex(-(d1 + sign * d2));
}

} // namespace shiftconv
