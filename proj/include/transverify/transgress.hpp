#pragma once

#include <stdexcept>
#include <string>

#include "transverify/phiforms.hpp"

namespace transverify {

// The nine transgressed families: deformation over the tangent connection
// (Tm), over the twist connection (Xi), and the 4k+1 variants (Tilde).
enum class CSKind { TmL, TmW, TmWp, XiL, XiW, XiWp, TildeL, TildeW, TildeWp };

inline const char* name(CSKind k) {
    switch (k) {
        case CSKind::TmL: return "CS-tm-L";
        case CSKind::TmW: return "CS-tm-W";
        case CSKind::TmWp: return "CS-tm-W'";
        case CSKind::XiL: return "CS-xi-L";
        case CSKind::XiW: return "CS-xi-W";
        case CSKind::XiWp: return "CS-xi-W'";
        case CSKind::TildeL: return "CS-tilde-L";
        case CSKind::TildeW: return "CS-tilde-W";
        case CSKind::TildeWp: return "CS-tilde-W'";
    }
    return "?";
}

struct CSForm {
    FormElement element;
    CSKind kind;
    int top_degree;
};

/**
 * tr[A g(R_t/4pi^2)] for an odd series g: the y^(2m+1) coefficient lands on
 * the degree-(4m+3) generator a_m with one pi stripped, so that a_m stands
 * for pi^(2m+2) tr[A (R_t/4pi^2)^(2m+1)] and the stored coefficients stay
 * pi-homogeneous.
 */
inline FormElement tm_odd_trace(const YSeries& g, const RingSpec& spec) {
    if (g.scan_parity() == Parity::None || g.scan_parity() == Parity::Even)
        throw std::invalid_argument("tm_odd_trace: series must be odd");
    if (g.valuation() < 0)
        throw std::invalid_argument("tm_odd_trace: series has an uncancelled pole");
    FormElement r(spec);
    for (int m = 0; 4 * m + 3 <= spec.dim; ++m) {
        if (2 * m + 1 >= g.y_trunc())
            throw std::invalid_argument("tm_odd_trace: series truncated below ring dimension");
        QExpansion c = g.coeff(2 * m + 1);
        if (c.is_zero()) continue;
        Monomial mono{std::vector<int>(spec.n_roots, 0), 0, m};
        r.set(mono, c.scaled(Scalar::pi(-1)));
    }
    return r;
}

/**
 * tr[B g(R_t^xi/4pi^2)] for an odd series g and the rank-two skew twist
 * curvature: tr[B (R^xi/4pi^2)^(2k+1)] = sqrt(-1) u^(2k+1) tr[BJ], so the
 * whole trace collapses onto U^(2m+1) b with b = pi sqrt(-1) tr[BJ].
 */
inline FormElement xi_odd_trace(const YSeries& g, const RingSpec& spec) {
    if (g.scan_parity() == Parity::None || g.scan_parity() == Parity::Even)
        throw std::invalid_argument("xi_odd_trace: series must be odd");
    if (g.valuation() < 0)
        throw std::invalid_argument("xi_odd_trace: series has an uncancelled pole");
    FormElement r(spec);
    for (int m = 0; 2 * (2 * m + 1) + 1 <= spec.dim; ++m) {
        if (2 * m + 1 >= g.y_trunc())
            throw std::invalid_argument("xi_odd_trace: series truncated below ring dimension");
        QExpansion c = g.coeff(2 * m + 1);
        if (c.is_zero()) continue;
        Monomial mono{std::vector<int>(spec.n_roots, 0), 2 * m + 1, kOddB};
        r.set(mono, c.scaled(Scalar::pi(-1)));
    }
    return r;
}

namespace detail {

// sqrt(2)/(8 pi^2) for the L family, 1/(8 pi^2) otherwise.
inline Scalar cs_prefactor(PhiFamily fam) {
    Scalar p = Scalar::pi(-2).scaled(Rational(1, 8));
    if (fam == PhiFamily::L) p *= Scalar::sqrt2();
    return p;
}

}  // namespace detail

/**
 * Transgression over the tangent connection: prefactor * Phi *
 * tr[A (1/z - theta'/theta + theta_i'/theta_i)(R_t/4pi^2)]. The integrand
 * is uniform in the deformation parameter, so one universal generator set
 * represents every t.
 */
inline CSForm cs_tm(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    int yo = spec.dim / 2 + 1;
    FormElement phi = phi_theta_route(fam, spec);
    YSeries combo = logderiv_combo(tm_combo(fam), yo, spec.q_order);
    FormElement f = (phi * tm_odd_trace(combo, spec)).scaled(detail::cs_prefactor(fam));
    CSKind kind = fam == PhiFamily::L ? CSKind::TmL
                  : fam == PhiFamily::W ? CSKind::TmW
                                        : CSKind::TmWp;
    return {f, kind, spec.dim};
}

/**
 * Transgression over the twist connection: prefactor * Phi *
 * tr[B (combination of theta log-derivatives)(R_t^xi/4pi^2)].
 */
inline CSForm cs_xi(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    int yo = spec.dim / 2 + 1;
    FormElement phi = phi_theta_route(fam, spec);
    YSeries combo = logderiv_combo(xi_combo(fam), yo, spec.q_order);
    FormElement f = (phi * xi_odd_trace(combo, spec)).scaled(detail::cs_prefactor(fam));
    CSKind kind = fam == PhiFamily::L ? CSKind::XiL
                  : fam == PhiFamily::W ? CSKind::XiW
                                        : CSKind::XiWp;
    return {f, kind, spec.dim};
}

// Tangent-connection transgression of the 4k+1 variants.
inline CSForm cs_tilde(PhiFamily fam, const RingSpec& spec) {
    spec.validate();
    int yo = spec.dim / 2 + 1;
    FormElement phi = phi_tilde_theta_route(fam, spec);
    YSeries combo = logderiv_combo(tm_combo(fam), yo, spec.q_order);
    FormElement f = (phi * tm_odd_trace(combo, spec)).scaled(detail::cs_prefactor(fam));
    CSKind kind = fam == PhiFamily::L ? CSKind::TildeL
                  : fam == PhiFamily::W ? CSKind::TildeW
                                        : CSKind::TildeWp;
    return {f, kind, spec.dim};
}

// Restriction to form degree exactly D, the cohomologically meaningful part.
inline FormElement top_component(const CSForm& f) {
    return f.element.degree_part(f.top_degree);
}

// Every monomial of a transgressed form carries exactly one odd factor.
inline bool odd_linear(const FormElement& e) {
    for (const auto& [m, c] : e.terms())
        if (m.odd == kOddNone) return false;
    return true;
}

}  // namespace transverify
