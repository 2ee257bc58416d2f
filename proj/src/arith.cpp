#include "shiftconv/arith.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace shiftconv {

namespace {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.backend().data(), 32) != 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd n.
Integer brent_rho(const Integer& n) {
    if (n % 2 == 0) return Integer(2);
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1, saved = 2;
        unsigned long power = 1, lam = 0;
        Integer prod = 1;
        while (d == 1) {
            if (lam == power) {
                saved = x;
                power *= 2;
                lam = 0;
            }
            x = (x * x + c) % n;
            ++lam;
            Integer diff = x >= saved ? x - saved : saved - x;
            if (diff == 0) break; // cycle closed without a factor; retry with new c
            prod = (prod * diff) % n;
            if (lam % 64 == 0 || lam == power) {
                d = gcd(prod, n);
                prod = 1;
            }
        }
        if (d > 1 && d < n) return d;
        // d == n: the batched gcd overshot, redo this c stepwise
        if (d == n) {
            x = 2;
            y = 2;
            do {
                x = (x * x + c) % n;
                y = (y * y + c) % n;
                y = (y * y + c) % n;
                Integer diff = x >= y ? x - y : y - x;
                d = diff == 0 ? Integer(0) : gcd(diff, n);
            } while (d == 1);
            if (d > 1 && d < n) return d;
        }
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<PrimePower> factorize(const Integer& n) {
    if (n == 0) throw InvalidParameter("factorize: n must be nonzero");
    Integer m = abs(n);
    std::map<Integer, unsigned> acc;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        while (mpz_divisible_ui_p(m.backend().data(), p)) {
            ++acc[Integer(p)];
            m /= p;
        }
    }
    if (m > 1) {
        // trial division up to 10^4 catches everything the sieve-sized inputs need
        for (unsigned long p = 41; p <= 10000 && m > 1; p += 2) {
            while (mpz_divisible_ui_p(m.backend().data(), p)) {
                ++acc[Integer(p)];
                m /= p;
            }
        }
        if (m > 1) factor_into(m, acc);
    }
    std::vector<PrimePower> out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    auto fac = factorize(n);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational sigma_exact(const Integer& n, long nu) {
    if (n == 0) throw InvalidParameter("sigma_exact: n must be nonzero");
    Rational acc(1);
    for (const auto& [p, e] : factorize(n)) {
        Rational term(0), pk(1);
        Rational pr = pow_int(Rational(p), nu);
        for (unsigned i = 0; i <= e; ++i) {
            term += pk;
            pk *= pr;
        }
        acc *= term;
    }
    return acc;
}

Complex sigma(const ZetaContext& ctx, const Integer& n, const Complex& nu) {
    long k = 0;
    if (is_small_int(nu, &k)) return Complex(to_real(sigma_exact(n, k)));
    PrecisionGuard guard(ctx);
    Complex acc(1);
    for (const auto& [p, e] : factorize(n)) {
        Complex term(0);
        Real pr = to_real(p);
        for (unsigned i = 0; i <= e; ++i) term += pow_positive(pr, nu * Complex(long(i)));
        acc *= term;
    }
    return acc;
}

Complex sigma_log(const ZetaContext& ctx, const Integer& n, const Complex& nu) {
    PrecisionGuard guard(ctx);
    Complex acc(0);
    for (const Integer& c : divisors(n)) {
        if (c == 1) continue;
        Real rc = to_real(c);
        acc += pow_positive(rc, nu) * log(rc);
    }
    return acc;
}

Real von_mangoldt(const ZetaContext& ctx, const Integer& m) {
    if (m < 1) throw InvalidParameter("von_mangoldt: m must be >= 1");
    if (m == 1) return Real(0);
    auto fac = factorize(m);
    if (fac.size() != 1) return Real(0);
    PrecisionGuard guard(ctx);
    return log(to_real(fac[0].p));
}

Complex mangoldt_power_sum(const ZetaContext& ctx, const Integer& d, const Complex& r) {
    if (d < 1) throw InvalidParameter("mangoldt_power_sum: d must be >= 1");
    PrecisionGuard guard(ctx);
    Complex acc(0);
    for (const auto& [p, e] : factorize(d)) {
        Real logp = log(to_real(p));
        Real pk = to_real(p);
        for (unsigned i = 1; i <= e; ++i) {
            acc += pow_positive(pk, r) * logp;
            pk *= to_real(p);
        }
    }
    return acc;
}

const Rational& bernoulli_number(unsigned k) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        unsigned m = static_cast<unsigned>(cache.size());
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, which yields B_1 = -1/2
        Rational s(0);
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[k];
}

Rational bernoulli_poly(unsigned k, const Rational& a) {
    Rational acc(0), apow(1);
    // B_k(a) = sum_j C(k, j) B_{k-j} a^j
    for (unsigned j = 0; j <= k; ++j) {
        acc += Rational(binomial(k, j)) * bernoulli_number(k - j) * apow;
        apow *= a;
    }
    return acc;
}

Real bernoulli_poly(unsigned k, const Real& a) {
    Real acc(0), apow(1);
    for (unsigned j = 0; j <= k; ++j) {
        acc += to_real(Rational(binomial(k, j)) * bernoulli_number(k - j)) * apow;
        apow *= a;
    }
    return acc;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    if (k > n) return Integer(0);
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

} // namespace shiftconv
