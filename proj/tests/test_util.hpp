#pragma once

#include "shiftconv/numbers.hpp"

#include <doctest.h>

namespace shiftconv::testing {

// |got - want| <= 10^-digits * max(1, |want|), with readable failure output.
inline void check_close(const Real& got, const Real& want, long digits) {
    using boost::multiprecision::abs;
    Real tol = pow(Real(10), -digits);
    Real scale = abs(want) > 1 ? Real(abs(want)) : Real(1);
    bool ok = abs(got - want) <= tol * scale;
    CHECK_MESSAGE(ok, "got ", decimal_string(got, 32), " want ", decimal_string(want, 32));
}

inline void check_close(const Complex& got, const Complex& want, long digits) {
    using boost::multiprecision::abs;
    Real tol = pow(Real(10), -digits);
    Real aw = shiftconv::abs(want);
    Real scale = aw > 1 ? aw : Real(1);
    bool ok = shiftconv::abs(got - want) <= tol * scale;
    CHECK_MESSAGE(ok, "got ", decimal_string(got, 32), " want ", decimal_string(want, 32));
}

} // namespace shiftconv::testing
