#pragma once

#include <stdexcept>
#include <string>

#include "transverify/yseries.hpp"

namespace transverify {

// The four classical Jacobi theta functions in (v, tau).
enum class ThetaFamily { Theta, Theta1, Theta2, Theta3 };

// The three characteristic-form families; L pairs with theta1 factors,
// W with theta2, W' with theta3.
enum class PhiFamily { L, W, Wp };

inline const char* name(ThetaFamily f) {
    switch (f) {
        case ThetaFamily::Theta: return "theta";
        case ThetaFamily::Theta1: return "theta1";
        case ThetaFamily::Theta2: return "theta2";
        case ThetaFamily::Theta3: return "theta3";
    }
    return "?";
}
inline const char* name(PhiFamily f) {
    switch (f) {
        case PhiFamily::L: return "Phi_L";
        case PhiFamily::W: return "Phi_W";
        case PhiFamily::Wp: return "Phi_W'";
    }
    return "?";
}

namespace detail {

// (1 + sign*2cos(2y) q^(nu/8) + q^(2nu/8)), the paired-exponential factor
// of the theta products.
inline YSeries theta_quad_factor(int sign, long nu, int y_trunc, long q_trunc) {
    YSeries r(y_trunc, Parity::Even);
    QExpansion c0 = QExpansion::one(q_trunc);
    c0.add_term(2 * nu, Scalar::one());
    r.set(0, c0);
    for (int d = 0; d < y_trunc; d += 2) {
        Rational coeff = rational_pow(Rational(2), d) / factorial(unsigned(d));
        if (d % 4 == 2) coeff = -coeff;
        r.add_term(d, QExpansion::monomial(nu, Scalar(coeff * 2 * sign), q_trunc));
    }
    return r;
}

inline QExpansion one_minus_qpow(long nu, long q_trunc) {
    QExpansion r = QExpansion::one(q_trunc);
    r.add_term(nu, Scalar(-1L));
    return r;
}
inline QExpansion one_plus_qpow(long nu, long q_trunc) {
    QExpansion r = QExpansion::one(q_trunc);
    r.add_term(nu, Scalar::one());
    return r;
}

}  // namespace detail

/**
 * Truncated two-variable expansion of a theta family in y = pi*v. The
 * infinite product is cut at the first factor contributing above the
 * q-window; theta and theta1 carry the overall 2 q^(1/8).
 */
inline YSeries theta_expand(ThetaFamily fam, int y_order, long q_order) {
    if (y_order < 1 || q_order < 1)
        throw std::invalid_argument("theta_expand: orders must be >= 1");
    const int Y = y_order;
    const long T = kQDenom * q_order;

    YSeries prod = YSeries::constant(QExpansion::one(T), Y);
    switch (fam) {
        case ThetaFamily::Theta:
        case ThetaFamily::Theta1: {
            int sign = (fam == ThetaFamily::Theta) ? -1 : +1;
            for (long j = 1; kQDenom * j <= T; ++j) {
                prod = prod.scaled(detail::one_minus_qpow(kQDenom * j, T));
                prod = prod * detail::theta_quad_factor(sign, kQDenom * j, Y, T);
            }
            YSeries trig = (fam == ThetaFamily::Theta) ? ysin(1, Y) : ycos(1, Y);
            YSeries r = trig * prod;
            return r.scaled(QExpansion::monomial(1, Scalar(2L)));
        }
        case ThetaFamily::Theta2:
        case ThetaFamily::Theta3: {
            int sign = (fam == ThetaFamily::Theta2) ? -1 : +1;
            for (long j = 1; kQDenom * j <= T; ++j)
                prod = prod.scaled(detail::one_minus_qpow(kQDenom * j, T));
            for (long j = 1; kQDenom * j - 4 <= T; ++j)
                prod = prod * detail::theta_quad_factor(sign, kQDenom * j - 4, Y, T);
            return prod;
        }
    }
    throw std::logic_error("theta_expand: bad family");
}

// Nullwerte theta_j(0, tau) from the product formulas, as plain q-series.
inline QExpansion theta_nullwert(ThetaFamily fam, long q_order) {
    const long T = kQDenom * q_order;
    QExpansion r = QExpansion::one(T);
    switch (fam) {
        case ThetaFamily::Theta:
            return QExpansion::zero(T + 1);
        case ThetaFamily::Theta1:
            for (long j = 1; kQDenom * j <= T; ++j) {
                r *= detail::one_minus_qpow(kQDenom * j, T);
                QExpansion p = detail::one_plus_qpow(kQDenom * j, T);
                r *= p * p;
            }
            return r * QExpansion::monomial(1, Scalar(2L));
        case ThetaFamily::Theta2:
        case ThetaFamily::Theta3:
            for (long j = 1; kQDenom * j <= T; ++j)
                r *= detail::one_minus_qpow(kQDenom * j, T);
            for (long j = 1; kQDenom * j - 4 <= T; ++j) {
                QExpansion p = (fam == ThetaFamily::Theta2)
                                   ? detail::one_minus_qpow(kQDenom * j - 4, T)
                                   : detail::one_plus_qpow(kQDenom * j - 4, T);
                r *= p * p;
            }
            return r;
    }
    throw std::logic_error("theta_nullwert: bad family");
}

// theta'(0, tau) = 2 pi q^(1/8) prod (1-q^j)^3; pi-degree 1 coefficients.
inline QExpansion theta_prime_nullwert(long q_order) {
    const long T = kQDenom * q_order;
    QExpansion r = QExpansion::one(T);
    for (long j = 1; kQDenom * j <= T; ++j) {
        QExpansion p = detail::one_minus_qpow(kQDenom * j, T);
        r *= p * p * p;
    }
    return r * QExpansion::monomial(1, Scalar::pi().scaled(Rational(2)));
}

// d/dv applied to a two-variable expansion.
inline YSeries theta_prime(const YSeries& s) { return s.v_derivative(); }

// Log-derivative f'(v)/f(v) as a YSeries (Laurent at a zero of f).
inline YSeries log_derivative(const YSeries& f) { return y_div(f.v_derivative(), f); }

/**
 * f_family(z) = z theta'(0)/theta(z) * theta_i(z)/theta_i(0): the even,
 * constant-term-1 building block applied to each Chern root.
 */
inline YSeries f_quotient(PhiFamily fam, int y_order, long q_order) {
    const int Y = y_order + 1;
    YSeries th = theta_expand(ThetaFamily::Theta, Y, q_order);
    ThetaFamily partner = fam == PhiFamily::L    ? ThetaFamily::Theta1
                          : fam == PhiFamily::W  ? ThetaFamily::Theta2
                                                 : ThetaFamily::Theta3;
    YSeries thp = theta_expand(partner, Y, q_order);
    // z theta'(0) = y * (theta'(0)/pi)
    QExpansion zlead = theta_prime_nullwert(q_order).scaled(Scalar::pi(-1));
    YSeries num = YSeries::monomial(1, zlead, Y);
    YSeries f = y_div(num, th);
    f = f * thp.scaled(theta_nullwert(partner, q_order).inverted());
    return f.truncated(y_order);
}

namespace detail {

// theta_i(u)/theta_i(0) for i = 1..3.
inline YSeries theta_ratio(ThetaFamily fam, int y_order, long q_order) {
    YSeries t = theta_expand(fam, y_order, q_order);
    return t.scaled(theta_nullwert(fam, q_order).inverted());
}

}  // namespace detail

/**
 * The u-dependent theta-quotient factor of each Phi family
 * (rank-two twist bundle content).
 */
inline YSeries phi_u_factor(PhiFamily fam, int y_order, long q_order) {
    using detail::theta_ratio;
    YSeries r1 = theta_ratio(ThetaFamily::Theta1, y_order, q_order);
    YSeries r2 = theta_ratio(ThetaFamily::Theta2, y_order, q_order);
    YSeries r3 = theta_ratio(ThetaFamily::Theta3, y_order, q_order);
    switch (fam) {
        case PhiFamily::L: return y_div(r3 * r2, r1 * r1).truncated(y_order);
        case PhiFamily::W: return y_div(r3 * r1, r2 * r2).truncated(y_order);
        case PhiFamily::Wp: return y_div(r1 * r2, r3 * r3).truncated(y_order);
    }
    throw std::logic_error("phi_u_factor: bad family");
}

/**
 * theta'(0)/theta(u) * [theta_i(u)/theta_i(0) - theta_i(0)theta_a(u)theta_b(u)
 * / (theta_i(u)theta_a(0)theta_b(0))]: the u-factor of the 4k+1 variants.
 * The u-pole cancels against the bracket's double zero; result is odd with
 * valuation >= 1.
 */
inline YSeries phi_tilde_u_factor(PhiFamily fam, int y_order, long q_order) {
    using detail::theta_ratio;
    const int Y = y_order + 2;
    YSeries th = theta_expand(ThetaFamily::Theta, Y, q_order);
    YSeries r1 = theta_ratio(ThetaFamily::Theta1, Y, q_order);
    YSeries r2 = theta_ratio(ThetaFamily::Theta2, Y, q_order);
    YSeries r3 = theta_ratio(ThetaFamily::Theta3, Y, q_order);
    YSeries self, others;
    switch (fam) {
        case PhiFamily::L: self = r1; others = r3 * r2; break;
        case PhiFamily::W: self = r2; others = r3 * r1; break;
        case PhiFamily::Wp: self = r3; others = r2 * r1; break;
    }
    YSeries bracket = self - y_div(others, self);
    YSeries lead = y_div(YSeries::constant(theta_prime_nullwert(q_order), Y), th);
    YSeries r = (lead * bracket).truncated(y_order);
    if (r.valuation() < 0)
        throw std::logic_error("phi_tilde_u_factor: u-pole failed to cancel");
    return r;
}

// The six odd log-derivative combinations entering the transgressed forms.
// Tm* combos subtract the theta pole; Xi* combos are pole-free sums.
enum class LogDerivCombo { TmL, TmW, TmWp, XiL, XiW, XiWp };

inline const char* name(LogDerivCombo c) {
    switch (c) {
        case LogDerivCombo::TmL: return "1/z - th'/th + th1'/th1";
        case LogDerivCombo::TmW: return "1/z - th'/th + th2'/th2";
        case LogDerivCombo::TmWp: return "1/z - th'/th + th3'/th3";
        case LogDerivCombo::XiL: return "th2'/th2 + th3'/th3 - 2 th1'/th1";
        case LogDerivCombo::XiW: return "th3'/th3 + th1'/th1 - 2 th2'/th2";
        case LogDerivCombo::XiWp: return "th2'/th2 + th1'/th1 - 2 th3'/th3";
    }
    return "?";
}

inline LogDerivCombo tm_combo(PhiFamily f) {
    switch (f) {
        case PhiFamily::L: return LogDerivCombo::TmL;
        case PhiFamily::W: return LogDerivCombo::TmW;
        case PhiFamily::Wp: return LogDerivCombo::TmWp;
    }
    throw std::logic_error("tm_combo");
}
inline LogDerivCombo xi_combo(PhiFamily f) {
    switch (f) {
        case PhiFamily::L: return LogDerivCombo::XiL;
        case PhiFamily::W: return LogDerivCombo::XiW;
        case PhiFamily::Wp: return LogDerivCombo::XiWp;
    }
    throw std::logic_error("xi_combo");
}

inline YSeries logderiv_combo(LogDerivCombo combo, int y_order, long q_order) {
    const int Y = y_order + 3;
    auto ld = [&](ThetaFamily f) { return log_derivative(theta_expand(f, Y, q_order)); };
    YSeries r(0);
    switch (combo) {
        case LogDerivCombo::TmL:
        case LogDerivCombo::TmW:
        case LogDerivCombo::TmWp: {
            ThetaFamily partner = combo == LogDerivCombo::TmL    ? ThetaFamily::Theta1
                                  : combo == LogDerivCombo::TmW  ? ThetaFamily::Theta2
                                                                 : ThetaFamily::Theta3;
            YSeries pole = YSeries::monomial(-1, QExpansion::constant(Scalar::pi()), Y);
            r = pole - ld(ThetaFamily::Theta) + ld(partner);
            break;
        }
        case LogDerivCombo::XiL:
            r = ld(ThetaFamily::Theta2) + ld(ThetaFamily::Theta3) -
                ld(ThetaFamily::Theta1).scaled(Rational(2));
            break;
        case LogDerivCombo::XiW:
            r = ld(ThetaFamily::Theta3) + ld(ThetaFamily::Theta1) -
                ld(ThetaFamily::Theta2).scaled(Rational(2));
            break;
        case LogDerivCombo::XiWp:
            r = ld(ThetaFamily::Theta2) + ld(ThetaFamily::Theta1) -
                ld(ThetaFamily::Theta3).scaled(Rational(2));
            break;
    }
    r = r.truncated(y_order);
    if (r.valuation() < 1)
        throw std::logic_error(std::string("logderiv_combo: pole failed to cancel in ") +
                               name(combo));
    r.set_parity(Parity::Odd);
    return r;
}

}  // namespace transverify
