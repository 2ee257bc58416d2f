#include "shiftconv/zeta.hpp"

#include "shiftconv/arith.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace shiftconv;
using shiftconv::testing::check_close;

namespace {

// Independent oracle for Re s > 1: direct partial sum plus integral sandwich.
// sum_{m>=N} (m+a)^{-s} lies within f(N)/2 of (N+a)^{1-s}/(s-1) + f(N)/2.
Real sandwich_oracle(const Real& s, const Real& a, unsigned N) {
    Real acc(0);
    for (unsigned m = 0; m < N; ++m) acc += pow(a + m, -s);
    Real fN = pow(a + N, -s);
    return acc + pow(a + N, 1 - s) / (s - 1) + fN / 2;
}

} // namespace

TEST_CASE("exact values at nonpositive integer s") {
    CHECK(riemann_zeta_nonpos(0) == Rational(-1, 2));
    CHECK(riemann_zeta_nonpos(-1) == Rational(-1, 12));
    CHECK(riemann_zeta_nonpos(-2) == 0);
    CHECK(riemann_zeta_nonpos(-3) == Rational(1, 120));
    CHECK(riemann_zeta_nonpos(-11) == Rational(691, 32760));
    CHECK(hurwitz_zeta_nonpos(-1, Rational(1, 2)) == Rational(1, 24));
    CHECK(hurwitz_zeta_nonpos(-2, Rational(1, 4)) == Rational(-1, 64));
    CHECK_THROWS_AS(hurwitz_zeta_nonpos(1, Rational(1, 2)), InvalidParameter);
}

TEST_CASE("numeric path agrees with exact path at integer s <= 0") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        long den = static_cast<long>(rng() % 60) + 2;
        long num = static_cast<long>(rng() % den) + 1;
        Rational a(num, den);
        for (long s = 0; s >= -10; --s) {
            Real got = hurwitz_zeta(ctx, Real(s), to_real(a));
            check_close(got, to_real(hurwitz_zeta_nonpos(s, a)), 48);
        }
    }
}

TEST_CASE("half-argument identity zeta(s,1/2) = (2^s - 1) zeta(s)") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        // spread over [-6, 6] avoiding the pole at s = 1
        Real s = Real(static_cast<long>(rng() % 1200)) / 100 - 6;
        if (abs(s - 1) < Real(1) / 8) s += Real(1) / 4;
        Real lhs = hurwitz_zeta(ctx, s, Real(1) / 2);
        Real rhs = (pow_positive(Real(2), s) - 1) * riemann_zeta(ctx, s);
        check_close(lhs, rhs, 45);
    }
}

TEST_CASE("Euler-Maclaurin matches the direct-sum sandwich oracle") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    struct Case {
        Real s, a;
    };
    for (const Case& c : {Case{Real(3), Real(1)}, Case{Real("2.5"), Real("0.7")},
                          Case{Real(7) / 3, Real("1.25")}, Case{Real(3), Real(501)}}) {
        Real got = hurwitz_zeta(ctx, c.s, c.a);
        Real want = sandwich_oracle(c.s, c.a, 20000);
        // oracle is good to about f(N)/2 ~ 1e-13 absolute
        CHECK(abs(got - want) < Real("1e-11") * (abs(want) + 1));
    }
}

TEST_CASE("zeta(2) and zeta(4) against pi at full precision") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    Real pi = pi_real();
    check_close(riemann_zeta(ctx, Real(2)), pi * pi / 6, 48);
    check_close(riemann_zeta(ctx, Real(4)), pi * pi * pi * pi / 90, 48);
}

TEST_CASE("recurrence zeta(s,a) - zeta(s,a+1) = a^-s") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    SUBCASE("real non-integer s") {
        Real s("-2.5"), a("0.3");
        Real lhs = hurwitz_zeta(ctx, s, a) - hurwitz_zeta(ctx, s, a + 1);
        check_close(lhs, pow(a, -s), 45);
    }
    SUBCASE("complex s") {
        Complex s(Real("2.5"), Real("1.5"));
        Real a("0.3");
        Complex lhs = hurwitz_zeta(ctx, s, a) - hurwitz_zeta(ctx, s, a + 1);
        check_close(lhs, pow_positive(a, -s), 45);
    }
}

TEST_CASE("multiplication theorem ties shifted arguments together") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    auto run = [&](const Complex& s) {
        Real a("0.4");
        long q = 3;
        Complex rhs(0);
        for (long j = 0; j < q; ++j) rhs += hurwitz_zeta(ctx, s, a + Real(j) / q);
        rhs *= pow_positive(Real(q), -s);
        check_close(hurwitz_zeta(ctx, s, Real(q) * a), rhs, 44);
    };
    run(Complex(Real("1.5"), Real(2)));
    run(Complex(Real("-2.5"), Real(0)));
    run(Complex(Real("3.25"), Real(0)));
}

TEST_CASE("s-derivative matches central differences") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    Real h("1e-20");
    SUBCASE("real s") {
        Real s("1.7"), a("0.3");
        Real fd = (hurwitz_zeta(ctx, s + h, a) - hurwitz_zeta(ctx, s - h, a)) / (2 * h);
        check_close(hurwitz_zeta_s_deriv(ctx, s, a), fd, 30);
    }
    SUBCASE("complex s") {
        Complex s(Real("2.2"), Real("0.9"));
        Real a("0.61");
        Complex fd =
            (hurwitz_zeta(ctx, s + Complex(h), a) - hurwitz_zeta(ctx, s - Complex(h), a)) /
            Complex(2 * h);
        check_close(hurwitz_zeta_s_deriv(ctx, s, a), fd, 30);
    }
    SUBCASE("negative non-integer s") {
        Real s("-3.4"), a("1.2");
        Real fd = (hurwitz_zeta(ctx, s + h, a) - hurwitz_zeta(ctx, s - h, a)) / (2 * h);
        check_close(hurwitz_zeta_s_deriv(ctx, s, a), fd, 30);
    }
}

TEST_CASE("classical derivative values") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    Real pi = pi_real();
    // zeta'(0) = -log(2 pi)/2
    check_close(riemann_zeta_deriv(ctx, Real(0)), -log(2 * pi) / 2, 45);
    // zeta'(-2) = -zeta(3)/(4 pi^2); right side uses only the value path
    Real want = -riemann_zeta(ctx, Real(3)) / (4 * pi * pi);
    check_close(riemann_zeta_deriv(ctx, Real(-2)), want, 44);
}

TEST_CASE("combined value and derivative agree with separate calls") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    for (long s : {-4L, -1L, 2L, 5L}) {
        if (s == 1) continue;
        Real a = Real(3) / 7;
        Real v, dv;
        hurwitz_zeta_both(ctx, Real(s), a, &v, &dv);
        check_close(v, hurwitz_zeta(ctx, Real(s), a), 46);
        check_close(dv, hurwitz_zeta_s_deriv(ctx, Real(s), a), 46);
    }
}

TEST_CASE("domain errors") {
    ZetaContext ctx;
    CHECK_THROWS_AS(hurwitz_zeta(ctx, Real(2), Real(0)), InvalidParameter);
    CHECK_THROWS_AS(hurwitz_zeta(ctx, Real(2), Real(-1)), InvalidParameter);
    CHECK_THROWS_AS(hurwitz_zeta(ctx, Real(1), Real("0.5")), InvalidParameter);
    CHECK_THROWS_AS(hurwitz_zeta_s_deriv(ctx, Real(1), Real("0.5")), InvalidParameter);
}

TEST_CASE("memo cache returns identical values and grows once") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    HurwitzCache cache;
    Real a = cached_hurwitz_value(ctx, &cache, 6, 3, 7);
    std::size_t n1 = cache.size();
    Real b = cached_hurwitz_value(ctx, &cache, 6, 3, 7);
    CHECK(cache.size() == n1);
    CHECK(a == b);
    check_close(a, hurwitz_zeta(ctx, Real(6), Real(3) / 7), 48);

    Real v, dv;
    cached_hurwitz_both(ctx, &cache, 6, 3, 7, &v, &dv);
    CHECK(v == a); // value key was already present
    check_close(dv, hurwitz_zeta_s_deriv(ctx, Real(6), Real(3) / 7), 46);
    Real dv2 = cached_hurwitz_deriv(ctx, &cache, 6, 3, 7);
    CHECK(dv2 == dv);
}
