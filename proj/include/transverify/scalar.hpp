#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "transverify/cyclo.hpp"

namespace transverify {

/**
 * Exact coefficient: a finite sum of CycloRational values graded by integer
 * powers of pi (negative powers allowed). pi is kept formal so that every
 * identity stays pi-homogeneous and exact; zero terms are never stored.
 */
class Scalar {
public:
    using TermMap = std::map<int, CycloRational>;

    Scalar() = default;
    explicit Scalar(const Rational& r) { set(0, CycloRational(r)); }
    explicit Scalar(long n) { set(0, CycloRational(n)); }
    Scalar(int pi_degree, CycloRational c) { set(pi_degree, std::move(c)); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1L); }
    static Scalar pi(int degree = 1) { return Scalar(degree, CycloRational::one()); }
    static Scalar zeta8_pow(long k) { return Scalar(0, CycloRational::zeta8_pow(k)); }
    static Scalar i() { return Scalar(0, CycloRational::i()); }
    static Scalar sqrt2() { return Scalar(0, CycloRational::sqrt2()); }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    CycloRational coeff(int pi_degree) const {
        auto it = t_.find(pi_degree);
        return it == t_.end() ? CycloRational::zero() : it->second;
    }

    // Single-term accessors; a Scalar is invertible iff it is a monomial.
    bool is_monomial() const { return t_.size() == 1; }
    std::optional<int> uniform_pi_degree() const {
        if (t_.size() != 1) return std::nullopt;
        return t_.begin()->first;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [d, c] : b.t_) r.add(d, c);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [d, c] : b.t_) r.add(d, -c);
        return r;
    }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [da, ca] : a.t_)
            for (const auto& [db, cb] : b.t_) r.add(da + db, ca * cb);
        return r;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.t_ == b.t_; }

    // Inverse of a monomial c*pi^d; anything else lies outside the graded
    // ring of finite sums and signals a modeling bug upstream.
    Scalar inverse() const {
        if (t_.size() != 1)
            throw std::domain_error("Scalar: only monomials are invertible");
        const auto& [d, c] = *t_.begin();
        return Scalar(-d, c.inverse());
    }

    Scalar scaled(const Rational& r) const {
        if (r == 0) return Scalar();
        Scalar out;
        CycloRational f(r);
        for (const auto& [d, c] : t_) out.t_.emplace(d, c * f);
        return out;
    }

    // Substitutes zeta8 -> exp(i pi/4) and pi -> its floating value.
    Complex to_complex() const {
        Complex acc(0.0, 0.0);
        for (const auto& [d, c] : t_) acc += c.to_complex() * std::pow(M_PI, d);
        return acc;
    }

    std::string str() const {
        std::string s;
        for (const auto& [d, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (d != 0) s += "*pi^" + std::to_string(d);
        }
        return s.empty() ? "0" : s;
    }

private:
    void set(int d, CycloRational c) {
        if (!c.is_zero()) t_.emplace(d, std::move(c));
    }
    void add(int d, const CycloRational& c) {
        auto it = t_.find(d);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(d, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    TermMap t_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return s.scaled(r); }

}  // namespace transverify
