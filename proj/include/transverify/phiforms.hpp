#pragma once

#include <stdexcept>

#include "transverify/charring.hpp"
#include "transverify/theta.hpp"

namespace transverify {

namespace hirz {

// A-hat per root pair: y/sin(y). The zero Chern root contributes 1.
inline YSeries ahat_per_root(int y_order) {
    return y_div(y_identity(y_order + 1), ysin(1, y_order + 1)).truncated(y_order);
}

// L-hat per root pair: 2y cos(y)/sin(y). The zero root contributes sqrt(2),
// which the route builders carry exactly as zeta8 - zeta8^3.
inline YSeries lhat_per_root(int y_order) {
    YSeries num = y_identity(y_order + 1) * ycos(1, y_order + 1);
    return y_div(num.scaled(Rational(2)), ysin(1, y_order + 1)).truncated(y_order);
}

// cosh(c/2) = cos(U) for the rank-two Euler form c = 2 sqrt(-1) U.
inline YSeries cosh_half_c(int y_order) { return ycos(1, y_order); }

// 2 sinh(c/2) = 2 sqrt(-1) sin(U).
inline YSeries two_sinh_half_c(int y_order) {
    return ysin(1, y_order).scaled(Scalar::i().scaled(Rational(2)));
}

}  // namespace hirz

namespace witten {

// Reduced exterior/symmetric power content per Chern-root pair at
// t = sign * q^(nu/8):
//   lambda: (1 + 2 sign cos(2y) q^(nu/8) + q^(2nu/8)) / (1 + sign q^(nu/8))^2
//   sym:    (1 - q^(nu/8))^2 / (1 - 2 cos(2y) q^(nu/8) + q^(2nu/8))
// Both equal 1 at y = 0, so zero roots drop out of the reduced products.
inline YSeries lambda_pair(int sign, long nu, int y_order, long q_trunc) {
    YSeries quad = detail::theta_quad_factor(sign, nu, y_order, q_trunc);
    QExpansion red = QExpansion::one(q_trunc);
    red.add_term(nu, Scalar(Rational(sign)));
    return quad.scaled((red * red).inverted());
}

inline YSeries sym_pair(long nu, int y_order, long q_trunc) {
    YSeries quad = detail::theta_quad_factor(-1, nu, y_order, q_trunc);
    QExpansion red = detail::one_minus_qpow(nu, q_trunc);
    return quad.inverted().scaled(red * red);
}

// ch of Lambda_t(xi-tilde) at t = sign q^(nu/8), as a pure U-series.
inline YSeries lambda_xi(int sign, long nu, int y_order, long q_trunc) {
    return lambda_pair(sign, nu, y_order, q_trunc);
}

}  // namespace witten

namespace detail {

struct RouteOrders {
    int y_order;   // y-window needed to fill the ring dimension
    long q_trunc;  // numerator window
};

inline RouteOrders route_orders(const RingSpec& spec) {
    return {spec.dim / 2 + 1, kQDenom * spec.q_order};
}

// The Witten tensor product S_{q^n} x Lambda_(t_m) restricted to one
// root pair, with the middle factor's t-pattern selected per family:
//   Theta1: t_m = +q^m, Theta2: t_m = -q^(m-1/2), Theta3: t_m = +q^(m-1/2).
inline YSeries witten_pair_series(PhiFamily fam, int y_order, long q_trunc) {
    YSeries r = YSeries::constant(QExpansion::one(q_trunc), y_order);
    for (long n = 1; kQDenom * n <= q_trunc; ++n)
        r = r * witten::sym_pair(kQDenom * n, y_order, q_trunc);
    switch (fam) {
        case PhiFamily::L:
            for (long m = 1; kQDenom * m <= q_trunc; ++m)
                r = r * witten::lambda_pair(+1, kQDenom * m, y_order, q_trunc);
            break;
        case PhiFamily::W:
            for (long m = 1; kQDenom * m - 4 <= q_trunc; ++m)
                r = r * witten::lambda_pair(-1, kQDenom * m - 4, y_order, q_trunc);
            break;
        case PhiFamily::Wp:
            for (long m = 1; kQDenom * m - 4 <= q_trunc; ++m)
                r = r * witten::lambda_pair(+1, kQDenom * m - 4, y_order, q_trunc);
            break;
    }
    return r;
}

// The twist-bundle content of ch(Theta_fam): the middle factor contributes
// Lambda^{-2} at U and the two tail factors contribute per their t-patterns.
inline YSeries witten_xi_series(PhiFamily fam, int y_order, long q_trunc) {
    YSeries r = YSeries::constant(QExpansion::one(q_trunc), y_order);
    auto mul_inv_sq = [&](int sign, long nu) {
        YSeries l = witten::lambda_xi(sign, nu, y_order, q_trunc);
        r = y_div(r, l * l);
    };
    auto mul = [&](int sign, long nu) {
        r = r * witten::lambda_xi(sign, nu, y_order, q_trunc);
    };
    switch (fam) {
        case PhiFamily::L:
            for (long m = 1; kQDenom * m <= q_trunc; ++m) mul_inv_sq(+1, kQDenom * m);
            for (long j = 1; kQDenom * j - 4 <= q_trunc; ++j) mul(+1, kQDenom * j - 4);
            for (long j = 1; kQDenom * j - 4 <= q_trunc; ++j) mul(-1, kQDenom * j - 4);
            break;
        case PhiFamily::W:
            for (long m = 1; kQDenom * m - 4 <= q_trunc; ++m) mul_inv_sq(-1, kQDenom * m - 4);
            for (long j = 1; kQDenom * j - 4 <= q_trunc; ++j) mul(+1, kQDenom * j - 4);
            for (long j = 1; kQDenom * j <= q_trunc; ++j) mul(+1, kQDenom * j);
            break;
        case PhiFamily::Wp:
            for (long m = 1; kQDenom * m - 4 <= q_trunc; ++m) mul_inv_sq(+1, kQDenom * m - 4);
            for (long j = 1; kQDenom * j <= q_trunc; ++j) mul(+1, kQDenom * j);
            for (long j = 1; kQDenom * j - 4 <= q_trunc; ++j) mul(-1, kQDenom * j - 4);
            break;
    }
    return r;
}

inline Scalar sqrt2_pow(int e) {
    return Scalar(0, CycloRational::sqrt2().pow(e));
}

}  // namespace detail

/**
 * Phi via the theta-quotient expressions: the per-root factor
 * z theta'(0)/theta(z) theta_i(z)/theta_i(0) at each Chern root times the
 * u-dependent theta quotient, with sqrt(2)^dim in front of the L family.
 */
inline FormElement phi_theta_route(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    auto [yo, qt] = detail::route_orders(spec);
    YSeries f = f_quotient(fam, yo, spec.q_order);
    FormElement r = substitute_x(f, spec, 0);
    for (int j = 1; j < spec.n_roots; ++j) r *= substitute_x(f, spec, j);
    r *= substitute_u(phi_u_factor(fam, yo, spec.q_order), spec);
    if (fam == PhiFamily::L) r = r.scaled(detail::sqrt2_pow(spec.dim));
    return r;
}

/**
 * Phi via the virtual-bundle definitions: Hirzebruch form times cosh-factor
 * times ch of the Witten tensor product, assembled from reduced S_t/Lambda_t
 * content per root pair. Independent of the theta-quotient route; their
 * equality is the module's central cross-check.
 */
inline FormElement phi_bundle_route(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    auto [yo, qt] = detail::route_orders(spec);
    YSeries per_root = (fam == PhiFamily::L ? hirz::lhat_per_root(yo)
                                            : hirz::ahat_per_root(yo)) *
                       detail::witten_pair_series(fam, yo + 1, qt);
    FormElement r = substitute_x(per_root.truncated(yo), spec, 0);
    for (int j = 1; j < spec.n_roots; ++j)
        r *= substitute_x(per_root.truncated(yo), spec, j);

    YSeries u_fac = detail::witten_xi_series(fam, yo + 2, qt);
    if (fam == PhiFamily::L) {
        u_fac = y_div(u_fac, hirz::cosh_half_c(yo + 2).pow(2));
    } else {
        u_fac = u_fac * hirz::cosh_half_c(yo + 2);
    }
    r *= substitute_u(u_fac.truncated(yo), spec);
    if (fam == PhiFamily::L) r = r.scaled(detail::sqrt2_pow(1));  // zero Chern root
    return r;
}

/**
 * The 4k+1 variants via the theta-quotient expressions, regular in U after
 * the pole of theta'(0)/theta(u) cancels against the bracket.
 * Prefactors: sqrt(2)^(4k+1)/(pi sqrt(-1)) for L, 1/(2 pi sqrt(-1)) else.
 */
inline FormElement phi_tilde_theta_route(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    auto [yo, qt] = detail::route_orders(spec);
    YSeries f = f_quotient(fam, yo, spec.q_order);
    FormElement r = substitute_x(f, spec, 0);
    for (int j = 1; j < spec.n_roots; ++j) r *= substitute_x(f, spec, j);
    r *= substitute_u(phi_tilde_u_factor(fam, yo, spec.q_order), spec);
    Scalar pref = Scalar::pi(-1) * Scalar(0, -CycloRational::i());  // 1/(pi sqrt(-1))
    if (fam == PhiFamily::L) pref *= detail::sqrt2_pow(spec.dim);
    else pref = pref.scaled(Rational(1, 2));
    return r.scaled(pref);
}

/**
 * The 4k+1 variants from the bundle definitions. The shared S/Lambda
 * content of T_C M + xi_C factors out of the bracket, which reduces to a
 * pure U-series handled at the Laurent level.
 */
inline FormElement phi_tilde_bundle_route(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    auto [yo, qt] = detail::route_orders(spec);
    const int yu = yo + 3;

    // Mixed content: per root pair of T_C M + xi_C (the 2k X-roots and U).
    YSeries pair = detail::witten_pair_series(fam, yu, qt);
    YSeries hz = (fam == PhiFamily::L ? hirz::lhat_per_root(yo) : hirz::ahat_per_root(yo));
    YSeries x_root = (hz * pair).truncated(yo);
    FormElement r = substitute_x(x_root, spec, 0);
    for (int j = 1; j < spec.n_roots; ++j) r *= substitute_x(x_root, spec, j);

    // Twist content: R_xi collects the reduced Lambda factors of
    // ch(Theta_fam(.., xi_C)); for the trivial twist they are all 1.
    YSeries r_xi = detail::witten_xi_series(fam, yu, qt);
    YSeries cosu = hirz::cosh_half_c(yu);
    YSeries sinu = ysin(1, yu);
    YSeries u_fac(0);
    if (fam == PhiFamily::L) {
        // cosh/sinh * (1 - R_xi/cosh^2) = (cos U - R_xi/cos U) / (i sin U)
        YSeries num = cosu - y_div(r_xi, cosu);
        u_fac = y_div(num, sinu).scaled(-Scalar::i());
    } else {
        // (1 - cosh * R_xi) / (2 sinh) = (1 - cos U * R_xi) / (2 i sin U)
        YSeries one = YSeries::constant(QExpansion::one(qt), yu);
        YSeries num = one - cosu * r_xi;
        u_fac = y_div(num, sinu).scaled((-Scalar::i()).scaled(Rational(1, 2)));
    }
    if (u_fac.valuation() < 0)
        throw std::logic_error("phi_tilde_bundle_route: U-pole failed to cancel");
    r *= substitute_u((pair * u_fac).truncated(yo), spec);
    if (fam == PhiFamily::L) r = r.scaled(detail::sqrt2_pow(1));  // zero Chern root
    return r;
}

}  // namespace transverify
