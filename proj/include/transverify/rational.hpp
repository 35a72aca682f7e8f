#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace transverify {

// Arbitrary-precision rational, always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

// Renders as "p" or "p/q" with q > 0.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool neg = e < 0;
    unsigned long n = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg) {
        if (b == 0) throw std::domain_error("rational_pow: zero to negative power");
        b = Rational(denominator(b), numerator(b));
    }
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

}  // namespace transverify
