#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "transverify/qexp.hpp"

namespace transverify {

enum class Parity { Even, Odd, None };

inline Parity parity_mul(Parity a, Parity b) {
    if (a == Parity::None || b == Parity::None) return Parity::None;
    return (a == b) ? Parity::Even : Parity::Odd;
}
inline Parity parity_add(Parity a, Parity b) { return (a == b) ? a : Parity::None; }
inline Parity parity_flip(Parity p) {
    if (p == Parity::Even) return Parity::Odd;
    if (p == Parity::Odd) return Parity::Even;
    return Parity::None;
}

/**
 * Truncated Laurent series in the normalized variable y = pi*v whose
 * coefficients are QExpansions. Finite poles (valuation -1 from theta
 * log-derivatives) are allowed; `y_trunc` is exclusive.
 */
class YSeries {
public:
    using TermMap = std::map<int, QExpansion>;

    explicit YSeries(int y_trunc = 0, Parity parity = Parity::None)
        : y_trunc_(y_trunc), parity_(parity) {}

    static YSeries zero(int y_trunc, Parity p = Parity::None) { return YSeries(y_trunc, p); }
    static YSeries constant(const QExpansion& q, int y_trunc) {
        YSeries r(y_trunc, Parity::Even);
        r.set(0, q);
        return r;
    }
    static YSeries monomial(int degree, const QExpansion& q, int y_trunc) {
        YSeries r(y_trunc, (degree % 2 == 0) ? Parity::Even : Parity::Odd);
        r.set(degree, q);
        return r;
    }

    const TermMap& terms() const { return t_; }
    int y_trunc() const { return y_trunc_; }
    Parity parity() const { return parity_; }
    void set_parity(Parity p) { parity_ = p; }
    bool is_zero() const { return t_.empty(); }

    int valuation() const { return t_.empty() ? y_trunc_ : t_.begin()->first; }

    QExpansion coeff(int degree) const {
        auto it = t_.find(degree);
        return it == t_.end() ? QExpansion() : it->second;
    }

    void set(int degree, const QExpansion& q) {
        if (degree >= y_trunc_) return;
        if (q.is_zero()) t_.erase(degree);
        else t_[degree] = q;
    }
    void add_term(int degree, const QExpansion& q) {
        if (degree >= y_trunc_ || q.is_zero()) return;
        auto it = t_.find(degree);
        if (it == t_.end()) {
            t_.emplace(degree, q);
            return;
        }
        it->second += q;
        if (it->second.is_zero()) t_.erase(it);
    }

    YSeries truncated(int new_trunc) const {
        YSeries r(std::min(y_trunc_, new_trunc), parity_);
        for (const auto& [d, c] : t_) r.set(d, c);
        return r;
    }

    friend YSeries operator+(const YSeries& a, const YSeries& b) {
        YSeries r(std::min(a.y_trunc_, b.y_trunc_), parity_add(a.parity_, b.parity_));
        for (const auto& [d, c] : a.t_) r.add_term(d, c);
        for (const auto& [d, c] : b.t_) r.add_term(d, c);
        return r;
    }
    friend YSeries operator-(const YSeries& a, const YSeries& b) {
        YSeries r(std::min(a.y_trunc_, b.y_trunc_), parity_add(a.parity_, b.parity_));
        for (const auto& [d, c] : a.t_) r.add_term(d, c);
        for (const auto& [d, c] : b.t_) r.add_term(d, -c);
        return r;
    }
    YSeries operator-() const {
        YSeries r(y_trunc_, parity_);
        for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
        return r;
    }

    friend YSeries operator*(const YSeries& a, const YSeries& b) {
        int vb = b.valuation();
        int ta = sat(a.y_trunc_, vb);
        int tb = sat(b.y_trunc_, a.valuation());
        YSeries r(std::min(ta, tb), parity_mul(a.parity_, b.parity_));
        for (const auto& [da, ca] : a.t_) {
            if (sat(da, vb) >= r.y_trunc_) break;
            for (const auto& [db, cb] : b.t_) {
                int d = da + db;
                if (d >= r.y_trunc_) break;
                r.add_term(d, ca * cb);
            }
        }
        return r;
    }

    YSeries& operator+=(const YSeries& o) { return *this = *this + o; }
    YSeries& operator-=(const YSeries& o) { return *this = *this - o; }
    YSeries& operator*=(const YSeries& o) { return *this = *this * o; }

    YSeries scaled(const Scalar& s) const {
        YSeries r(y_trunc_, parity_);
        for (const auto& [d, c] : t_) r.add_term(d, c.scaled(s));
        return r;
    }
    YSeries scaled(const Rational& f) const { return scaled(Scalar(f)); }
    YSeries scaled(const QExpansion& q) const {
        YSeries r(*this);
        r.t_.clear();
        for (const auto& [d, c] : t_) r.add_term(d, c * q);
        return r;
    }

    YSeries shifted(int degrees) const {
        YSeries r(sat(y_trunc_, degrees), parity_);
        for (const auto& [d, c] : t_) r.t_.emplace(d + degrees, c);
        return r;
    }

    /**
     * Laurent division; the divisor's lowest coefficient must be invertible.
     */
    friend YSeries y_div(const YSeries& a, const YSeries& b) {
        if (b.t_.empty())
            throw std::domain_error("y_div: division by (truncated) zero");
        int va = a.valuation(), vb = b.valuation();
        QExpansion lead_inv = b.t_.begin()->second.inverted();
        int out_trunc = std::min(a.y_trunc_, sat(b.y_trunc_, va - vb)) - vb;
        // parity(a/b) = parity(a) "minus" parity(b); same table as mul.
        YSeries q(out_trunc, parity_mul(a.parity_, b.parity_));
        for (int d = va - vb; d < out_trunc; ++d) {
            QExpansion acc = a.coeff(d + vb);
            for (const auto& [j, cq] : q.t_) {
                QExpansion bc = b.coeff(d - j + vb);
                if (!bc.is_zero()) acc -= cq * bc;
            }
            q.set(d, acc * lead_inv);
        }
        return q;
    }

    YSeries inverted() const {
        YSeries one(y_trunc_ - 2 * valuation() + 1, Parity::Even);
        one.set(0, QExpansion::one());
        return y_div(one, *this);
    }

    YSeries pow(long e) const {
        if (e < 0) return inverted().pow(-e);
        if (e == 0) {
            YSeries r(y_trunc_, Parity::Even);
            r.set(0, QExpansion::one());
            return r;
        }
        YSeries b = *this;
        YSeries result = b;
        for (long i = 1; i < e; ++i) result = result * b;
        return result;
    }

    // d/dv = pi * d/dy: term-wise y-derivative with coefficients promoted
    // one pi-degree. y_trunc drops by 1.
    YSeries v_derivative() const {
        YSeries r(y_trunc_ - 1, parity_flip(parity_));
        for (const auto& [d, c] : t_) {
            if (d == 0) continue;
            r.add_term(d - 1, c.scaled(Scalar::pi().scaled(Rational(d))));
        }
        return r;
    }

    // tau -> tau + 1 applied to every coefficient.
    YSeries tau_shifted() const {
        YSeries r(y_trunc_, parity_);
        for (const auto& [d, c] : t_) r.t_.emplace(d, c.tau_shift());
        return r;
    }

    // Scans stored coefficients; zero counts as both parities.
    Parity scan_parity() const {
        bool has_even = false, has_odd = false;
        for (const auto& [d, c] : t_) {
            if (c.is_zero()) continue;
            (d % 2 == 0 ? has_even : has_odd) = true;
        }
        if (has_even && has_odd) return Parity::None;
        if (has_odd) return Parity::Odd;
        return Parity::Even;
    }

    // Smallest coefficient q-window among stored terms.
    long min_q_trunc() const {
        long m = kInfTrunc;
        for (const auto& [d, c] : t_) m = std::min(m, c.trunc());
        return m;
    }

    std::string str() const {
        std::string s;
        for (const auto& [d, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "[" + c.str() + "]";
            if (d != 0) s += "*y^" + std::to_string(d);
        }
        if (s.empty()) s = "0";
        return s + " + O(y^" + std::to_string(y_trunc_) + ")";
    }

private:
    static int sat(int a, int b) {
        long s = long(a) + long(b);
        if (s > (1L << 30)) s = 1L << 30;
        if (s < -(1L << 30)) s = -(1L << 30);
        return int(s);
    }

    TermMap t_;
    int y_trunc_;
    Parity parity_;
};

inline bool equal_to_truncation(const YSeries& a, const YSeries& b) {
    int t = std::min(a.y_trunc(), b.y_trunc());
    for (const auto& [d, c] : a.terms())
        if (d < t && !equal_to_truncation(c, b.coeff(d))) return false;
    for (const auto& [d, c] : b.terms())
        if (d < t && !equal_to_truncation(c, a.coeff(d))) return false;
    return true;
}

// --- elementary series with rational coefficients ---

// sin(a*y), exact coefficients a^(2k+1)/(2k+1)!.
inline YSeries ysin(long a, int y_trunc) {
    YSeries r(y_trunc, Parity::Odd);
    Rational num(1);
    for (int d = 1; d < y_trunc; d += 2) {
        num = rational_pow(Rational(a), d) / factorial(unsigned(d));
        if (d % 4 == 3) num = -num;
        r.set(d, QExpansion::constant(Scalar(num)));
    }
    return r;
}

// cos(a*y)
inline YSeries ycos(long a, int y_trunc) {
    YSeries r(y_trunc, Parity::Even);
    for (int d = 0; d < y_trunc; d += 2) {
        Rational num = rational_pow(Rational(a), d) / factorial(unsigned(d));
        if (d % 4 == 2) num = -num;
        r.set(d, QExpansion::constant(Scalar(num)));
    }
    return r;
}

// y itself as a series
inline YSeries y_identity(int y_trunc) {
    return YSeries::monomial(1, QExpansion::one(), y_trunc);
}

}  // namespace transverify
