#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "transverify/scalar.hpp"

namespace transverify {

// Truncation bound used for exact (non-truncated) expansions.
inline constexpr long kInfTrunc = 1L << 40;

// Global exponent denominator: every exponent is n/8 with integer n.
inline constexpr long kQDenom = 8;

/**
 * Truncated Puiseux series in q with exponents in (1/8)Z and Scalar
 * coefficients. `trunc` is exclusive: terms with numerator >= trunc are
 * unknown. Arithmetic propagates truncation pessimistically; silent
 * precision loss is the failure mode this bookkeeping exists to prevent.
 */
class QExpansion {
public:
    using TermMap = std::map<long, Scalar>;

    QExpansion() : trunc_(kInfTrunc) {}
    explicit QExpansion(long trunc) : trunc_(trunc) {}

    static QExpansion zero(long trunc = kInfTrunc) { return QExpansion(trunc); }
    static QExpansion constant(const Scalar& s, long trunc = kInfTrunc) {
        QExpansion r(trunc);
        r.set(0, s);
        return r;
    }
    static QExpansion one(long trunc = kInfTrunc) {
        return constant(Scalar::one(), trunc);
    }
    // c * q^{num/8}
    static QExpansion monomial(long num, const Scalar& c, long trunc = kInfTrunc) {
        QExpansion r(trunc);
        r.set(num, c);
        return r;
    }

    const TermMap& terms() const { return t_; }
    long trunc() const { return trunc_; }
    bool is_zero() const { return t_.empty(); }

    // Valuation numerator; for a stored-zero series all that is known is
    // valuation >= trunc, which is exactly what products need.
    long valuation() const { return t_.empty() ? trunc_ : t_.begin()->first; }

    Scalar coeff(long num) const {
        auto it = t_.find(num);
        return it == t_.end() ? Scalar() : it->second;
    }

    void set(long num, const Scalar& s) {
        if (num >= trunc_) return;
        if (s.is_zero()) t_.erase(num);
        else t_[num] = s;
    }
    void add_term(long num, const Scalar& s) {
        if (num >= trunc_ || s.is_zero()) return;
        auto it = t_.find(num);
        if (it == t_.end()) {
            t_.emplace(num, s);
            return;
        }
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }

    QExpansion truncated(long new_trunc) const {
        QExpansion r(std::min(trunc_, new_trunc));
        for (const auto& [n, c] : t_) {
            if (n >= r.trunc_) break;
            r.t_.emplace(n, c);
        }
        return r;
    }

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b) {
        QExpansion r(std::min(a.trunc_, b.trunc_));
        for (const auto& [n, c] : a.t_) r.add_term(n, c);
        for (const auto& [n, c] : b.t_) r.add_term(n, c);
        return r;
    }
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b) {
        QExpansion r(std::min(a.trunc_, b.trunc_));
        for (const auto& [n, c] : a.t_) r.add_term(n, c);
        for (const auto& [n, c] : b.t_) r.add_term(n, -c);
        return r;
    }
    QExpansion operator-() const {
        QExpansion r(trunc_);
        for (const auto& [n, c] : t_) r.t_.emplace(n, -c);
        return r;
    }

    friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
        long vb = b.valuation();
        long ta = sat_add(a.trunc_, vb);
        long tb = sat_add(b.trunc_, a.valuation());
        QExpansion r(std::min(ta, tb));
        for (const auto& [na, ca] : a.t_) {
            if (na + vb >= r.trunc_) break;
            for (const auto& [nb, cb] : b.t_) {
                long n = na + nb;
                if (n >= r.trunc_) break;
                r.add_term(n, ca * cb);
            }
        }
        return r;
    }

    QExpansion& operator+=(const QExpansion& o) { return *this = *this + o; }
    QExpansion& operator-=(const QExpansion& o) { return *this = *this - o; }
    QExpansion& operator*=(const QExpansion& o) { return *this = *this * o; }

    QExpansion scaled(const Scalar& s) const {
        QExpansion r(trunc_);
        for (const auto& [n, c] : t_) r.add_term(n, c * s);
        return r;
    }
    QExpansion scaled(const Rational& f) const { return scaled(Scalar(f)); }

    // Shift by q^{num/8}.
    QExpansion shifted(long num) const {
        QExpansion r(sat_add(trunc_, num));
        for (const auto& [n, c] : t_) r.t_.emplace(n + num, c);
        return r;
    }

    /**
     * Multiplicative inverse up to truncation. Requires the lowest term to
     * be an invertible (monomial) Scalar; failure signals a modeling bug.
     */
    QExpansion inverted() const {
        if (t_.empty())
            throw std::domain_error("QExpansion: inverse of (truncated) zero");
        long v = valuation();
        Scalar lead_inv = t_.begin()->second.inverse();
        if (t_.size() == 1)
            return monomial(-v, lead_inv, trunc_ >= kInfTrunc ? kInfTrunc : trunc_ - 2 * v);
        if (trunc_ >= kInfTrunc)
            throw std::domain_error("QExpansion: exact inverse of a non-monomial series");
        // Normalize to 1 + n with val(n) >= 1, invert by coefficient recursion.
        QExpansion u(trunc_ - v);
        for (const auto& [n, c] : t_) u.set(n - v, c * lead_inv);
        QExpansion w(u.trunc_);
        w.set(0, Scalar::one());
        // w = 1/u: w_n = -sum_{0<j<=n} u_j w_{n-j}
        for (long n = 1; n < u.trunc_; ++n) {
            Scalar acc;
            for (const auto& [j, uc] : u.t_) {
                if (j <= 0 || j > n) continue;
                Scalar wc = w.coeff(n - j);
                if (!wc.is_zero()) acc += uc * wc;
            }
            if (!acc.is_zero()) w.set(n, -acc);
        }
        QExpansion r = w.scaled(lead_inv);
        return r.shifted(-v);
    }

    QExpansion pow(long e) const {
        if (e < 0) return inverted().pow(-e);
        if (e == 0) return one(trunc_);
        QExpansion b = *this;
        QExpansion result = QExpansion::one();
        bool first = true;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) {
                result = first ? b : result * b;
                first = false;
            }
            n >>= 1;
            if (n) b = b * b;
        }
        return result;
    }

    // tau -> tau + 1 sends q^{n/8} to zeta8^n q^{n/8}; truncation unchanged.
    QExpansion tau_shift() const {
        QExpansion r(trunc_);
        for (const auto& [n, c] : t_)
            r.t_.emplace(n, c * Scalar::zeta8_pow(n));
        return r;
    }

    struct EvalResult {
        Complex value;
        double tail;  // crude magnitude estimate of the first unknown term
    };

    // Numeric evaluation at tau in the upper half plane.
    EvalResult eval(Complex tau) const {
        if (tau.imag() <= 0.0)
            throw std::domain_error("QExpansion: eval requires Im(tau) > 0");
        const Complex two_pi_i(0.0, 2.0 * M_PI);
        Complex acc(0.0, 0.0);
        double cmax = 0.0;
        for (const auto& [n, c] : t_) {
            Complex term = c.to_complex() * std::exp(two_pi_i * tau * (double(n) / kQDenom));
            acc += term;
            cmax = std::max(cmax, std::abs(c.to_complex()));
        }
        double tail = 0.0;
        if (trunc_ < kInfTrunc) {
            double qabs = std::exp(-2.0 * M_PI * tau.imag() / kQDenom);
            tail = std::max(cmax, 1.0) * std::pow(qabs, double(trunc_)) / (1.0 - qabs);
        }
        return {acc, tail};
    }

    std::string str() const {
        std::string s;
        for (const auto& [n, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (n != 0) s += "*q^(" + std::to_string(n) + "/8)";
        }
        if (s.empty()) s = "0";
        if (trunc_ < kInfTrunc) s += " + O(q^(" + std::to_string(trunc_) + "/8))";
        return s;
    }

private:
    static long sat_add(long a, long b) {
        if (a >= kInfTrunc && b >= kInfTrunc) return kInfTrunc;
        long s = a + b;
        return std::min(s, kInfTrunc);
    }

    TermMap t_;
    long trunc_;
};

// Equality of the jointly known prefix (everything below the common bound).
inline bool equal_to_truncation(const QExpansion& a, const QExpansion& b) {
    long t = std::min(a.trunc(), b.trunc());
    QExpansion d = (a - b).truncated(t);
    return d.is_zero();
}

}  // namespace transverify
