#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "transverify/yseries.hpp"

namespace transverify {

/**
 * Configuration of the universal truncated characteristic-form ring:
 * even Chern-root generators X_1..X_n and U (degree 2 each), odd trace
 * generators a_k (degree 4k+3) and b (degree 1), all modulo form degree
 * > dim. An identity verified here holds for every manifold, bundle and
 * connection by Chern-Weil universality.
 */
struct RingSpec {
    int n_roots = 0;
    int dim = 0;       // odd form-degree truncation
    long q_order = 0;  // q-window in whole powers of q
    bool has_xi = true;

    // 4k-1 dimensional configuration: 2k-1 root pairs plus one zero root.
    static RingSpec lower(int k, long q_order) {
        return RingSpec{2 * k - 1, 4 * k - 1, q_order, true};
    }
    // 4k+1 dimensional configuration: 2k root pairs plus one zero root.
    static RingSpec upper(int k, long q_order) {
        return RingSpec{2 * k, 4 * k + 1, q_order, true};
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

    void validate() const {
        if (dim % 2 == 0 || dim < 1)
            throw std::invalid_argument("RingSpec: dim must be odd");
        if (n_roots < 1 || q_order < 1)
            throw std::invalid_argument("RingSpec: bad configuration");
    }
};

// Odd generator tag: kOddNone, kOddB (the xi trace, degree 1), or k >= 0
// for a_k (the tangent trace tr[A (R_t/4pi^2)^(2k+1)], degree 4k+3).
inline constexpr int kOddNone = -1;
inline constexpr int kOddB = -2;

inline int odd_degree(int odd) {
    if (odd == kOddNone) return 0;
    if (odd == kOddB) return 1;
    return 4 * odd + 3;
}

inline std::string odd_name(int odd) {
    if (odd == kOddNone) return "";
    if (odd == kOddB) return "b";
    return "a" + std::to_string(odd);
}

struct Monomial {
    std::vector<int> x;  // exponents of X_1..X_n
    int u = 0;
    int odd = kOddNone;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int even_degree() const {
        return 2 * (std::accumulate(x.begin(), x.end(), 0) + u);
    }
    int degree() const { return even_degree() + odd_degree(odd); }

    std::string str() const {
        std::string s;
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            s += " X" + std::to_string(j + 1);
            if (x[j] > 1) s += "^" + std::to_string(x[j]);
        }
        if (u > 0) {
            s += " U";
            if (u > 1) s += "^" + std::to_string(u);
        }
        if (odd != kOddNone) s += " " + odd_name(odd);
        return s.empty() ? "1" : s.substr(1);
    }
};

/**
 * Element of the universal ring: sparse monomial map with QExpansion
 * coefficients. Products truncate at spec.dim and kill monomials with two
 * odd factors (the transgression integrands are linear in the trace).
 */
class FormElement {
public:
    using TermMap = std::map<Monomial, QExpansion>;

    explicit FormElement(const RingSpec& spec) : spec_(spec) {}

    static FormElement zero(const RingSpec& spec) { return FormElement(spec); }
    static FormElement constant(const RingSpec& spec, const QExpansion& c) {
        FormElement r(spec);
        r.set(Monomial{std::vector<int>(spec.n_roots, 0), 0, kOddNone}, c);
        return r;
    }
    static FormElement one(const RingSpec& spec) {
        return constant(spec, QExpansion::one());
    }

    const RingSpec& spec() const { return spec_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    QExpansion coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? QExpansion() : it->second;
    }

    void set(const Monomial& m, const QExpansion& c) {
        check_monomial(m);
        if (m.degree() > spec_.dim) return;
        if (c.is_zero()) t_.erase(m);
        else t_[m] = c;
    }
    void add_term(const Monomial& m, const QExpansion& c) {
        check_monomial(m);
        if (m.degree() > spec_.dim || c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    friend FormElement operator+(const FormElement& a, const FormElement& b) {
        a.check_spec(b);
        FormElement r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend FormElement operator-(const FormElement& a, const FormElement& b) {
        a.check_spec(b);
        FormElement r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    FormElement operator-() const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    friend FormElement operator*(const FormElement& a, const FormElement& b) {
        a.check_spec(b);
        FormElement r(a.spec_);
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) {
                if (ma.odd != kOddNone && mb.odd != kOddNone) continue;  // odd*odd = 0
                Monomial m;
                m.x.resize(ma.x.size());
                for (size_t j = 0; j < m.x.size(); ++j) m.x[j] = ma.x[j] + mb.x[j];
                m.u = ma.u + mb.u;
                m.odd = (ma.odd != kOddNone) ? ma.odd : mb.odd;
                if (m.degree() > a.spec_.dim) continue;
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    FormElement& operator+=(const FormElement& o) { return *this = *this + o; }
    FormElement& operator-=(const FormElement& o) { return *this = *this - o; }
    FormElement& operator*=(const FormElement& o) { return *this = *this * o; }

    FormElement scaled(const Scalar& s) const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) r.add_term(m, c.scaled(s));
        return r;
    }
    FormElement scaled(const Rational& f) const { return scaled(Scalar(f)); }
    FormElement scaled(const QExpansion& q) const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) r.add_term(m, c * q);
        return r;
    }

    // Restriction to monomials of one form degree.
    FormElement degree_part(int degree) const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_)
            if (m.degree() == degree) r.t_.emplace(m, c);
        return r;
    }

    // q^0 Fourier coefficient, kept as an element with constant coefficients.
    FormElement q_constant_term() const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) {
            Scalar c0 = c.coeff(0);
            if (!c0.is_zero()) r.t_.emplace(m, QExpansion::constant(c0, c.trunc()));
        }
        return r;
    }

    bool is_q_constant() const {
        for (const auto& [m, c] : t_)
            for (const auto& [n, s] : c.terms())
                if (n != 0) return false;
        return true;
    }

    // tau -> tau + 1 on every coefficient.
    FormElement tau_shifted() const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, c.tau_shift());
        return r;
    }

    FormElement permuted_roots(const std::vector<int>& perm) const {
        FormElement r(spec_);
        for (const auto& [m, c] : t_) {
            Monomial p = m;
            for (size_t j = 0; j < m.x.size(); ++j) p.x[perm[j]] = m.x[j];
            r.add_term(p, c);
        }
        return r;
    }

    // All coefficients concentrated at one pi-degree, and which one.
    std::optional<int> uniform_pi_degree() const {
        std::optional<int> deg;
        for (const auto& [m, c] : t_)
            for (const auto& [n, s] : c.terms())
                for (const auto& [d, cy] : s.terms()) {
                    if (!deg) deg = d;
                    else if (*deg != d) return std::nullopt;
                }
        return deg ? deg : std::optional<int>(0);
    }

    long min_q_trunc() const {
        long t = kInfTrunc;
        for (const auto& [m, c] : t_) t = std::min(t, c.trunc());
        return t;
    }

    std::string str() const {
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += "\n";
            s += m.str() + " : " + c.str();
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_spec(const FormElement& o) const {
        if (!(spec_ == o.spec_))
            throw std::invalid_argument("FormElement: mixed ring configurations");
    }
    void check_monomial(const Monomial& m) const {
        if (int(m.x.size()) != spec_.n_roots)
            throw std::invalid_argument("FormElement: monomial arity mismatch");
        if (m.u > 0 && !spec_.has_xi)
            throw std::invalid_argument("FormElement: U used without xi");
    }

    RingSpec spec_;
    TermMap t_;
};

inline bool equal_to_truncation(const FormElement& a, const FormElement& b) {
    if (!(a.spec() == b.spec())) return false;
    for (const auto& [m, c] : a.terms())
        if (!equal_to_truncation(c, b.coeff(m))) return false;
    for (const auto& [m, c] : b.terms())
        if (!equal_to_truncation(c, a.coeff(m))) return false;
    return true;
}

/**
 * Realizes a regular y-series at an even generator: y -> X_j (index >= 0)
 * or y -> U (index < 0). Nilpotence above spec.dim truncates; the series
 * must carry enough y-orders to cover every surviving power.
 */
inline FormElement substitute(const YSeries& s, const RingSpec& spec, int x_index) {
    if (s.valuation() < 0)
        throw std::invalid_argument("substitute: series has a pole");
    if (2 * (s.y_trunc() - 1) < spec.dim - 1)
        throw std::invalid_argument("substitute: series truncated below ring dimension");
    FormElement r(spec);
    for (const auto& [d, c] : s.terms()) {
        if (2 * d > spec.dim) break;
        Monomial m;
        m.x.assign(spec.n_roots, 0);
        if (x_index >= 0) m.x[x_index] = d;
        else m.u = d;
        r.add_term(m, c);
    }
    return r;
}

inline FormElement substitute_x(const YSeries& s, const RingSpec& spec, int j) {
    if (j < 0 || j >= spec.n_roots)
        throw std::invalid_argument("substitute_x: root index out of range");
    return substitute(s, spec, j);
}
inline FormElement substitute_u(const YSeries& s, const RingSpec& spec) {
    return substitute(s, spec, -1);
}

}  // namespace transverify
