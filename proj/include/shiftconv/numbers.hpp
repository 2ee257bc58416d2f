#pragma once

// Number types shared across the library.
//
// Real is an MPFR-backed float whose precision is chosen at runtime, per
// thread. Every public entry point that takes a ZetaContext installs a
// PrecisionGuard, so all arithmetic inside one call runs at a single uniform
// working precision (context digits plus guard digits). Complex is a plain
// re/im pair over Real with only the operations the library needs.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace shiftconv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Contract violation in arguments (wrong domain, wrong shape).
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative scheme did not reach the requested accuracy within its budget.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precision and Euler-Maclaurin knobs carried by every numeric kernel call.
// Immutable after construction by convention; safe to share across threads.
struct ZetaContext {
    unsigned precision = 50;              // target decimal digits of results
    unsigned guard_digits = 12;           // extra working digits inside kernels
    unsigned euler_maclaurin_terms = 240; // cap on correction terms per attempt
    unsigned shift_threshold = 8;         // minimum upward shift before the asymptotic tail
    unsigned threads = 1;                 // worker bound for range-parallel reductions

    unsigned working_digits() const { return precision + guard_digits; }
};

// RAII bump of the thread-default MPFR precision, in decimal digits.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    explicit PrecisionGuard(const ZetaContext& ctx) : PrecisionGuard(ctx.working_digits()) {}
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    ~PrecisionGuard() { Real::default_precision(saved_); }

  private:
    unsigned saved_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& n);

// pi at the current thread precision.
Real pi_real();

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long v) : re(v), im(0) {}
    Complex(int v) : re(v), im(0) {}
    explicit Complex(const Rational& q) : re(to_real(q)), im(0) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
inline Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
inline Complex operator*(const Real& b, const Complex& a) { return a * b; }
inline Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z);
Complex exp(const Complex& z);
// exp(i*pi*z); exact +-1 when z is an integer (no trig roundoff on the hot path).
Complex exp_i_pi(const Complex& z);
// base^e for base > 0.
Real pow_positive(const Real& base, const Real& e);
Complex pow_positive(const Real& base, const Complex& e);

// Exact integer-exponent powers (negative bases allowed).
Rational pow_int(const Rational& base, long e);
Rational pow_int(const Integer& base, long e);

// True when x holds an integral value that fits in a long.
bool is_small_int(const Real& x, long* out);
bool is_small_int(const Complex& z, long* out);

// a - floor(a), in [0, 1).
Rational frac_part(const Rational& a);

// Fixed-point decimal rendering used by reports (round-trips at the given digits).
std::string decimal_string(const Real& x, unsigned digits);
std::string decimal_string(const Complex& z, unsigned digits);

} // namespace shiftconv
