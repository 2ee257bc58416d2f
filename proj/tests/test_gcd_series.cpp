#include "shiftconv/gcd_series.hpp"

#include "shiftconv/arith.hpp"
#include "shiftconv/zeta.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <mpfr.h>

using namespace shiftconv;
using shiftconv::testing::check_close;

namespace {

Real pow_si(const Real& base, long e) {
    Real r;
    mpfr_pow_si(r.backend().data(), base.backend().data(), e, MPFR_RNDN);
    return r;
}

} // namespace

TEST_CASE("closed form matches direct sums across the convergence grid") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    for (long d : {1L, 2L, 4L, 6L, 9L, 12L, 30L}) {
        for (long t1 : {-4L, -6L}) {
            for (long t2 : {-2L, 0L, 1L, 2L}) {
                Complex closed = gcd_series(ctx, d, Complex(t1), Complex(t2));
                auto direct = gcd_series_direct(ctx, d, Complex(t1), Complex(t2), 10000);
                CHECK(closed.is_real());
                CHECK(direct.value.is_real());
                CHECK(abs(closed - direct.value) <= direct.tail_bound);
            }
        }
    }
    // away from integer exponents the continuation is the same analytic object
    Complex t1(Real(-7) / 2, Real(7) / 10), t2(Real(1), Real(-3) / 10);
    Complex closed = gcd_series(ctx, 12, t1, t2);
    auto direct = gcd_series_direct(ctx, 12, t1, t2, 3000);
    CHECK(abs(closed - direct.value) <= direct.tail_bound);
}

TEST_CASE("power form special values hold exactly") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    for (long d = 1; d <= 50; ++d) {
        for (long k = -4; k <= 4; ++k) {
            Complex at_zero = gcd_pow_dirichlet(ctx, d, Complex(-k), Complex(k));
            CHECK(at_zero.is_real());
            CHECK(at_zero.re == to_real(pow_int(Rational(d), k) * Rational(-1, 2)));
            for (long j = 1; j <= 3; ++j)
                CHECK(gcd_pow_dirichlet(ctx, d, Complex(-k - 2 * j), Complex(k)).is_zero());
        }
    }
}

TEST_CASE("power form reduces to zeta when k = 0 or d = 1") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    for (long d : {2L, 12L, 50L}) {
        Complex got = gcd_pow_dirichlet(ctx, d, Complex(-5), Complex(0));
        CHECK(got.re == to_real(riemann_zeta_nonpos(-5)));
        check_close(gcd_pow_dirichlet(ctx, d, Complex(Real(5) / 2), Complex(0)),
                    Complex(riemann_zeta(ctx, Real(5) / 2)), 48);
    }
    check_close(gcd_pow_dirichlet(ctx, 1, Complex(1), Complex(2)),
                Complex(riemann_zeta(ctx, Real(3))), 50);
    check_close(gcd_pow_dirichlet(ctx, 1, Complex(Real(3) / 2), Complex(Real(3) / 2)),
                Complex(riemann_zeta(ctx, Real(3))), 45);
}

TEST_CASE("log form matches its displayed examples and the direct sum") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    CHECK(gcd_log_dirichlet(ctx, 1, Complex(3)).is_zero());
    Complex got4 = gcd_log_dirichlet(ctx, 4, Complex(3));
    check_close(got4, Complex(riemann_zeta(ctx, Real(3)) * log(Real(2)) * to_real(Rational(9, 64))),
                50);
    Complex got6 = gcd_log_dirichlet(ctx, 6, Complex(2));
    Real want6 = riemann_zeta(ctx, Real(2)) * (log(Real(2)) / 4 + log(Real(3)) / 9);
    check_close(got6, Complex(want6), 50);

    // direct sum over log gcd(c, 4) / c^3 with tail bound log(4) N^-2 / 2
    const long N = 100000;
    Real log2 = log(Real(2)), log4 = log(Real(4)), acc(0);
    for (long c = 2; c <= N; c += 2) acc += pow_si(Real(c), -3) * (c % 4 == 0 ? log4 : log2);
    Real bound = log4 * pow_si(Real(N), -2) / 2;
    CHECK(abs(Complex(acc) - got4) <= bound);
}

TEST_CASE("partial derivatives agree with central differences") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    Real h = pow_si(Real(10), -20);
    auto fd = [&](const Integer& d, const Complex& t1, const Complex& t2) {
        Complex d1 = (gcd_series(ctx, d, t1 + Complex(h), t2) -
                      gcd_series(ctx, d, t1 - Complex(h), t2)) /
                     (2 * h);
        Complex d2 = (gcd_series(ctx, d, t1, t2 + Complex(h)) -
                      gcd_series(ctx, d, t1, t2 - Complex(h))) /
                     (2 * h);
        return std::make_pair(d1, d2);
    };

    struct Point {
        long d;
        Complex t1, t2;
    };
    for (const Point& pt : {Point{12, Complex(-3), Complex(0)},
                            Point{30, Complex(Real(-5) / 2), Complex(Real(6) / 5)},
                            Point{8, Complex(Real(-3), Real(1) / 3), Complex(Real(1) / 2, Real(-1) / 5)}}) {
        auto got = gcd_series_partials(ctx, pt.d, pt.t1, pt.t2);
        auto want = fd(pt.d, pt.t1, pt.t2);
        check_close(got.first, want.first, 25);
        check_close(got.second, want.second, 25);
    }
}

TEST_CASE("corollary derivative forms match the general partials") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    auto at12 = gcd_series_partials(ctx, 12, Complex(-3), Complex(0));
    check_close(gcd_deriv_t1(ctx, 12, Complex(-3)), at12.first, 45);
    check_close(gcd_deriv_t2(ctx, 12, Complex(-3)), at12.second, 45);
    check_close(gcd_deriv_t1(ctx, 12, Complex(-3)), -riemann_zeta_deriv(ctx, Complex(3)), 48);

    Complex got = gcd_deriv_t2(ctx, 4, Complex(-3));
    check_close(got, Complex(riemann_zeta(ctx, Real(3)) * log(Real(2)) * to_real(Rational(9, 64))),
                50);
    // same Lambda-sum as the log-weighted series at s = -r
    check_close(got, gcd_log_dirichlet(ctx, 4, Complex(3)), 50);
    CHECK(gcd_deriv_t2(ctx, 1, Complex(-3)).is_zero());

    // derivative at a positive-k point, checked against central differences
    Real h = pow_si(Real(10), -20);
    for (long d : {4L, 18L}) {
        Complex f1 = (gcd_series(ctx, d, Complex(-2) + Complex(h), Complex(0)) -
                      gcd_series(ctx, d, Complex(-2) - Complex(h), Complex(0))) /
                     (2 * h);
        check_close(gcd_deriv_t1(ctx, d, Complex(-2)), f1, 20);
        Complex f2 = (gcd_series(ctx, d, Complex(-2), Complex(h)) -
                      gcd_series(ctx, d, Complex(-2), -Complex(h))) /
                     (2 * h);
        check_close(gcd_deriv_t2(ctx, d, Complex(-2)), f2, 20);
    }
}

TEST_CASE("direct sum reproduces the worked oracle examples") {
    ZetaContext ctx;
    PrecisionGuard guard(ctx);
    auto zeta2 = gcd_series_direct(ctx, 1, Complex(-2), Complex(0), 10000);
    CHECK(abs(Complex(riemann_zeta(ctx, Real(2))) - zeta2.value) <= zeta2.tail_bound);

    auto big = gcd_series_direct(ctx, 2, Complex(-3), Complex(1), 1000000);
    Complex closed = gcd_pow_dirichlet(ctx, 2, Complex(2), Complex(1));
    CHECK(big.cutoff == 1000000);
    check_close(big.value, closed, 10);

    auto mid = gcd_series_direct(ctx, 6, Complex(-4), Complex(2), 100000);
    check_close(mid.value, gcd_pow_dirichlet(ctx, 6, Complex(2), Complex(2)), 12);

    Real loose = gcd_series_direct(ctx, 6, Complex(-4), Complex(2), 1000).tail_bound;
    Real tight = gcd_series_direct(ctx, 6, Complex(-4), Complex(2), 10000).tail_bound;
    CHECK(tight > 0);
    CHECK(loose > tight);
}

TEST_CASE("poles and region violations are rejected") {
    ZetaContext ctx;
    CHECK_THROWS_AS(gcd_pow_dirichlet(ctx, 5, Complex(3), Complex(-2)), InvalidParameter);
    CHECK_THROWS_AS(gcd_pow_dirichlet(ctx, 5, Complex(Real(1) / 2), Complex(Real(1) / 2)),
                    InvalidParameter);
    CHECK_THROWS_AS(gcd_log_dirichlet(ctx, 4, Complex(1)), InvalidParameter);
    CHECK_THROWS_AS(gcd_deriv_t1(ctx, 5, Complex(-1)), InvalidParameter);
    CHECK_THROWS_AS(gcd_deriv_t2(ctx, 5, Complex(-1)), InvalidParameter);
    CHECK_THROWS_AS(gcd_series(ctx, 6, Complex(-1), Complex(2)), InvalidParameter);
    CHECK_THROWS_AS(gcd_series_partials(ctx, 6, Complex(-1), Complex(2)), InvalidParameter);
    CHECK_THROWS_AS(gcd_series_direct(ctx, 2, Complex(-1), Complex(-3), 100), InvalidParameter);
    CHECK_THROWS_AS(gcd_series_direct(ctx, 2, Complex(-3), Complex(Real(5) / 2), 100),
                    InvalidParameter);
    CHECK_THROWS_AS(gcd_series(ctx, 0, Complex(-3), Complex(1)), InvalidParameter);
    CHECK_THROWS_AS(gcd_series_direct(ctx, 2, Complex(-3), Complex(0), 0), InvalidParameter);
}
