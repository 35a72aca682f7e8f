#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "transverify/theta.hpp"

namespace transverify {

// The three index-3 subgroups of SL2(Z) the six forms live over.
enum class ModularGroup { Gamma0_2, Gamma_upper0_2, GammaTheta };

inline const char* name(ModularGroup g) {
    switch (g) {
        case ModularGroup::Gamma0_2: return "Gamma_0(2)";
        case ModularGroup::Gamma_upper0_2: return "Gamma^0(2)";
        case ModularGroup::GammaTheta: return "Gamma_theta";
    }
    return "?";
}

// Conjugation by T swaps Gamma^0(2) and Gamma_theta, fixes Gamma_0(2).
inline ModularGroup t_conjugate(ModularGroup g) {
    switch (g) {
        case ModularGroup::Gamma0_2: return ModularGroup::Gamma0_2;
        case ModularGroup::Gamma_upper0_2: return ModularGroup::GammaTheta;
        case ModularGroup::GammaTheta: return ModularGroup::Gamma_upper0_2;
    }
    return g;
}

struct ModularForm {
    QExpansion series;
    int weight = 0;
    ModularGroup group = ModularGroup::Gamma0_2;
};

namespace detail {

inline QExpansion nullwert_pow4(ThetaFamily f, long q_order) {
    QExpansion n = theta_nullwert(f, q_order);
    return n * n * n * n;
}

}  // namespace detail

/**
 * delta_i, epsilon_i from fourth powers of theta nullwerte:
 *   delta1 = (th2^4 + th3^4)/8    epsilon1 = th2^4 th3^4 / 16
 *   delta2 = -(th1^4 + th3^4)/8   epsilon2 = th1^4 th3^4 / 16
 *   delta3 = (th1^4 - th2^4)/8    epsilon3 = -th1^4 th2^4 / 16
 */
inline ModularForm delta(int i, long q_order) {
    using detail::nullwert_pow4;
    QExpansion s;
    ModularGroup g;
    switch (i) {
        case 1:
            s = (nullwert_pow4(ThetaFamily::Theta2, q_order) +
                 nullwert_pow4(ThetaFamily::Theta3, q_order))
                    .scaled(Rational(1, 8));
            g = ModularGroup::Gamma0_2;
            break;
        case 2:
            s = (nullwert_pow4(ThetaFamily::Theta1, q_order) +
                 nullwert_pow4(ThetaFamily::Theta3, q_order))
                    .scaled(Rational(-1, 8));
            g = ModularGroup::Gamma_upper0_2;
            break;
        case 3:
            s = (nullwert_pow4(ThetaFamily::Theta1, q_order) -
                 nullwert_pow4(ThetaFamily::Theta2, q_order))
                    .scaled(Rational(1, 8));
            g = ModularGroup::GammaTheta;
            break;
        default:
            throw std::invalid_argument("delta: i must be 1..3");
    }
    return {s, 2, g};
}

inline ModularForm epsilon(int i, long q_order) {
    using detail::nullwert_pow4;
    QExpansion s;
    ModularGroup g;
    switch (i) {
        case 1:
            s = (nullwert_pow4(ThetaFamily::Theta2, q_order) *
                 nullwert_pow4(ThetaFamily::Theta3, q_order))
                    .scaled(Rational(1, 16));
            g = ModularGroup::Gamma0_2;
            break;
        case 2:
            s = (nullwert_pow4(ThetaFamily::Theta1, q_order) *
                 nullwert_pow4(ThetaFamily::Theta3, q_order))
                    .scaled(Rational(1, 16));
            g = ModularGroup::Gamma_upper0_2;
            break;
        case 3:
            s = (nullwert_pow4(ThetaFamily::Theta1, q_order) *
                 nullwert_pow4(ThetaFamily::Theta2, q_order))
                    .scaled(Rational(-1, 16));
            g = ModularGroup::GammaTheta;
            break;
        default:
            throw std::invalid_argument("epsilon: i must be 1..3");
    }
    return {s, 4, g};
}

// tau -> tau + 1 on the expansion; group relabeled by the conjugation table.
inline ModularForm t_transform(const ModularForm& f) {
    return {f.series.tau_shift(), f.weight, t_conjugate(f.group)};
}

struct BasisTerm {
    int delta_pow;    // exponent of (8 delta2)
    int epsilon_pow;  // exponent of epsilon2
    Scalar coeff;
};

struct BasisDecomposition {
    std::vector<BasisTerm> terms;
    QExpansion residual;  // zero on success
    bool ok = false;
};

/**
 * Writes a weight-2m expansion over Gamma^0(2) in the monomial basis
 * (8 delta2)^a epsilon2^b, 2a + 4b = 2m. The epsilon2-valuations 4b make
 * the system triangular: solve from the leading coefficients, then insist
 * the remainder vanishes to truncation.
 */
inline BasisDecomposition basis_decompose(const QExpansion& f, int weight, long q_order) {
    if (weight % 2 != 0) throw std::invalid_argument("basis_decompose: odd weight");
    for (const auto& [n, c] : f.terms())
        if (n % 4 != 0)
            throw std::invalid_argument(
                "basis_decompose: expansion has exponents outside (1/2)Z");
    const int m = weight / 2;
    QExpansion d2 = delta(2, q_order).series.scaled(Rational(8));
    QExpansion e2 = epsilon(2, q_order).series;

    BasisDecomposition out;
    QExpansion rem = f;
    for (int b = 0; 2 * b <= m; ++b) {
        int a = m - 2 * b;
        QExpansion mono = d2.pow(a) * e2.pow(b);
        long v = 4L * b;  // q^(b/2) leading exponent
        Scalar lead = mono.coeff(v);
        Scalar z = rem.coeff(v) * lead.inverse();
        out.terms.push_back({a, b, z});
        rem -= mono.scaled(z);
    }
    out.residual = rem;
    out.ok = rem.is_zero();
    return out;
}

// Rebuilds sum z_i (8 delta2)^a epsilon2^b from a coefficient list.
inline QExpansion basis_build(const std::vector<BasisTerm>& terms, long q_order) {
    QExpansion d2 = delta(2, q_order).series.scaled(Rational(8));
    QExpansion e2 = epsilon(2, q_order).series;
    QExpansion acc = QExpansion::zero(kQDenom * q_order);
    for (const auto& t : terms)
        acc += (d2.pow(t.delta_pow) * e2.pow(t.epsilon_pow)).scaled(t.coeff);
    return acc;
}

}  // namespace transverify
