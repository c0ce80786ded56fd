#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace subword {

// All arithmetic in this library is exact.  Counts, Mobius values, Betti
// numbers and polynomial coefficients are arbitrary-precision integers;
// symmetric-function coordinates are arbitrary-precision rationals.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer ipow(const Integer& base, unsigned exp) {
    Integer r = 1;
    Integer b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline int parity_sign(long long m) { return (m % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Integer& v) { return v.str(); }

// Rationals render as "p" when integral and "p/q" otherwise.
inline std::string to_string(const Rational& v) {
    Integer num = numerator(v);
    Integer den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace subword
