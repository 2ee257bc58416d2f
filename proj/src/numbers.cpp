#include "shiftconv/numbers.hpp"

#include <mpfr.h>

#include <sstream>

namespace shiftconv {

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real pi_real() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& n) {
    Real r;
    mpfr_set_z(r.backend().data(), n.backend().data(), MPFR_RNDN);
    return r;
}

Complex& Complex::operator*=(const Complex& o) {
    if (o.im.is_zero()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    Real nre = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(nre);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    if (o.im.is_zero()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Real den = o.re * o.re + o.im * o.im;
    Real nre = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(nre);
    return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
    Complex r = a;
    r *= b;
    return r;
}

Complex operator/(const Complex& a, const Complex& b) {
    Complex r = a;
    r /= b;
    return r;
}

Real abs(const Complex& z) {
    if (z.im.is_zero()) return boost::multiprecision::abs(z.re);
    if (z.re.is_zero()) return boost::multiprecision::abs(z.im);
    return sqrt(z.re * z.re + z.im * z.im);
}

Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    Real m = exp(z.re);
    if (z.im.is_zero()) return Complex(m);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex exp_i_pi(const Complex& z) {
    long k = 0;
    if (is_small_int(z, &k)) return Complex((k % 2 == 0) ? 1 : -1);
    // exp(i*pi*(x+iy)) = exp(-pi*y) * (cos(pi*x) + i*sin(pi*x))
    Real pi = pi_real();
    Real m = z.im.is_zero() ? Real(1) : Real(exp(-pi * z.im));
    Real px = pi * z.re;
    return Complex(m * cos(px), m * sin(px));
}

Real pow_positive(const Real& base, const Real& e) {
    if (base <= 0) throw InvalidParameter("pow_positive: base must be positive");
    long k = 0;
    if (is_small_int(e, &k)) {
        Real r;
        mpfr_pow_si(r.backend().data(), base.backend().data(), k, MPFR_RNDN);
        return r;
    }
    return pow(base, e);
}

Complex pow_positive(const Real& base, const Complex& e) {
    if (e.im.is_zero()) return Complex(pow_positive(base, e.re));
    if (base <= 0) throw InvalidParameter("pow_positive: base must be positive");
    return exp(e * Complex(log(base)));
}

Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw InvalidParameter("pow_int: 0 to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long m = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Rational acc(1);
    while (m != 0) {
        if (m & 1) acc *= b;
        b *= b;
        m >>= 1;
    }
    return acc;
}

Rational pow_int(const Integer& base, long e) { return pow_int(Rational(base), e); }

bool is_small_int(const Real& x, long* out) {
    if (!mpfr_integer_p(x.backend().data())) return false;
    if (!mpfr_fits_slong_p(x.backend().data(), MPFR_RNDN)) return false;
    if (out) *out = mpfr_get_si(x.backend().data(), MPFR_RNDN);
    return true;
}

bool is_small_int(const Complex& z, long* out) { return z.im.is_zero() && is_small_int(z.re, out); }

Rational frac_part(const Rational& a) {
    Integer fl;
    mpz_fdiv_q(fl.backend().data(), boost::multiprecision::numerator(a).backend().data(),
               boost::multiprecision::denominator(a).backend().data());
    return a - Rational(fl);
}

std::string decimal_string(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

std::string decimal_string(const Complex& z, unsigned digits) {
    if (z.is_real()) return decimal_string(z.re, digits);
    std::string s = decimal_string(z.re, digits);
    std::string t = decimal_string(z.im, digits);
    if (!t.empty() && t[0] != '-') s += "+";
    return s + t + "i";
}

} // namespace shiftconv
