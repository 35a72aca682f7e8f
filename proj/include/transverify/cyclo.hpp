#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "transverify/rational.hpp"

namespace transverify {

/**
 * Element of the cyclotomic field Q(zeta8), zeta8 a primitive 8th root of
 * unity, stored on the power basis {1, z, z^2, z^3} with z^4 = -1.
 *
 * Notable constants: zeta8^2 = sqrt(-1) and zeta8 - zeta8^3 = sqrt(2).
 */
class CycloRational {
public:
    CycloRational() = default;
    explicit CycloRational(const Rational& r) { c_[0] = r; }
    explicit CycloRational(long n) { c_[0] = Rational(n); }
    CycloRational(Rational a0, Rational a1, Rational a2, Rational a3)
        : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static CycloRational zero() { return CycloRational(); }
    static CycloRational one() { return CycloRational(Rational(1)); }

    // zeta8^k for any integer k, reduced by zeta8^4 = -1.
    static CycloRational zeta8_pow(long k) {
        long m = ((k % 8) + 8) % 8;
        CycloRational r;
        r.c_[m % 4] = (m < 4) ? Rational(1) : Rational(-1);
        return r;
    }

    static CycloRational i() { return zeta8_pow(2); }
    static CycloRational sqrt2() {
        CycloRational r;
        r.c_[1] = 1;
        r.c_[3] = -1;
        return r;
    }

    const Rational& coeff(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    // The rational part; throws when the element is not purely rational.
    const Rational& rational_part() const {
        if (!is_rational()) throw std::domain_error("CycloRational: not rational");
        return c_[0];
    }

    friend CycloRational operator+(const CycloRational& a, const CycloRational& b) {
        CycloRational r;
        for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend CycloRational operator-(const CycloRational& a, const CycloRational& b) {
        CycloRational r;
        for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    CycloRational operator-() const {
        CycloRational r;
        for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }

    // Negacyclic convolution: zeta8^(i+j) wraps with sign via zeta8^4 = -1.
    friend CycloRational operator*(const CycloRational& a, const CycloRational& b) {
        CycloRational r;
        for (int i = 0; i < 4; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.c_[j] == 0) continue;
                Rational p = a.c_[i] * b.c_[j];
                int k = i + j;
                if (k >= 4) r.c_[k - 4] -= p;
                else r.c_[k] += p;
            }
        }
        return r;
    }

    CycloRational& operator+=(const CycloRational& o) { return *this = *this + o; }
    CycloRational& operator-=(const CycloRational& o) { return *this = *this - o; }
    CycloRational& operator*=(const CycloRational& o) { return *this = *this * o; }

    friend bool operator==(const CycloRational& a, const CycloRational& b) {
        return a.c_ == b.c_;
    }

    // Galois conjugate zeta8 -> zeta8^k, k odd in {1,3,5,7}.
    CycloRational galois(int k) const {
        CycloRational r;
        for (int i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            int e = (i * k) % 8;
            if (e >= 4) r.c_[e - 4] -= c_[i];
            else r.c_[e] += c_[i];
        }
        return r;
    }

    // Field inverse via the product of the three nontrivial conjugates:
    // x * g3(x) * g5(x) * g7(x) is the rational norm.
    CycloRational inverse() const {
        if (is_zero()) throw std::domain_error("CycloRational: inverse of zero");
        CycloRational adj = galois(3) * galois(5) * galois(7);
        CycloRational n = *this * adj;
        const Rational& norm = n.rational_part();
        CycloRational r;
        for (int k = 0; k < 4; ++k) r.c_[k] = adj.c_[k] / norm;
        return r;
    }

    CycloRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloRational acc = one();
        CycloRational b = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    // zeta8 -> exp(i pi/4).
    Complex to_complex() const {
        static const double s = std::sqrt(0.5);
        Complex z8(s, s);
        Complex acc(rational_to_double(c_[0]), 0.0);
        Complex p = z8;
        for (int k = 1; k < 4; ++k) {
            acc += rational_to_double(c_[k]) * p;
            p *= z8;
        }
        return acc;
    }

    std::string str() const {
        static const char* names[4] = {"", "*z8", "*z8^2", "*z8^3"};
        std::string s;
        for (int k = 0; k < 4; ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rational_to_string(c_[k]) + names[k];
        }
        return s.empty() ? "0" : s;
    }

private:
    std::array<Rational, 4> c_{};  // coefficients of 1, z8, z8^2, z8^3
};

}  // namespace transverify
