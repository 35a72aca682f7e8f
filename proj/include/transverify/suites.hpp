#pragma once

#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "transverify/report.hpp"

namespace transverify {

struct SuiteOptions {
    long q_order = 0;  // 0: per-suite default (env TRANSVERIFY_DEFAULT_QORDER wins)
    int y_order = 0;   // 0: derived from the other orders
    double tol = 1e-9;
    std::vector<Complex> tau_samples;  // empty: EvalConfig defaults
    std::vector<Complex> v_samples;

    long exact_order() const {
        if (q_order > 0) return q_order;
        if (const char* env = std::getenv("TRANSVERIFY_DEFAULT_QORDER")) {
            long v = std::atol(env);
            if (v >= 1) return v;
        }
        return 6;
    }
    long cancel_order() const { return q_order > 0 ? q_order : 4; }

    EvalConfig eval_config() const {
        EvalConfig cfg;
        cfg.tol = tol;
        if (!tau_samples.empty()) cfg.tau_samples = tau_samples;
        if (!v_samples.empty()) cfg.v_samples = v_samples;
        return cfg;
    }
};

namespace detail {

inline std::string orders_str(long q_order, int y_order = 0) {
    std::string s = "q-order " + std::to_string(q_order);
    if (y_order > 0) s += ", y-order " + std::to_string(y_order);
    return s;
}

inline CheckResult exact_check(const std::string& id, const std::string& ref, bool pass,
                               long q_order, int y_order = 0,
                               const std::string& detail_on_fail = "mismatch") {
    return {id, ref, pass, pass ? "exact" : detail_on_fail, orders_str(q_order, y_order), {}};
}

}  // namespace detail

// --- theta-basics ---------------------------------------------------------

inline VerificationReport suite_theta_basics(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "theta-basics";
    const long Q = opt.exact_order();
    const int Y = opt.y_order > 0 ? opt.y_order : 9;

    YSeries th = theta_expand(ThetaFamily::Theta, Y, Q);
    YSeries th1 = theta_expand(ThetaFamily::Theta1, Y, Q);
    YSeries th2 = theta_expand(ThetaFamily::Theta2, Y, Q);
    YSeries th3 = theta_expand(ThetaFamily::Theta3, Y, Q);

    bool parities = th.scan_parity() == Parity::Odd && th1.scan_parity() == Parity::Even &&
                    th2.scan_parity() == Parity::Even && th3.scan_parity() == Parity::Even;
    rep.add(detail::exact_check("parity-tags", "odd/even symmetry of the four theta expansions",
                                parities, Q, Y));

    QExpansion lead = th.coeff(1);
    bool lead_ok = lead.valuation() == 1 && lead.coeff(1) == Scalar(2L);
    rep.add(detail::exact_check("theta-y1-coeff",
                                "y-linear coefficient of theta starts 2 q^(1/8)", lead_ok, Q, Y));

    QExpansion t2n = theta_nullwert(ThetaFamily::Theta2, Q);
    bool t2_ok = t2n.coeff(0) == Scalar(1L) && t2n.coeff(4) == Scalar(-2L);
    rep.add(detail::exact_check("theta2-nullwert",
                                "theta2(0) = 1 - 2q^(1/2) + O(q)", t2_ok, Q));

    QExpansion tp0 = theta_prime(th).coeff(0);
    bool tp_ok = equal_to_truncation(tp0, theta_prime_nullwert(Q)) &&
                 tp0.coeff(1) == Scalar::pi().scaled(Rational(2));
    rep.add(detail::exact_check(
        "theta-prime-null", "theta'(0) = 2 pi q^(1/8) prod(1-q^j)^3 via both routes", tp_ok, Q, Y));

    YSeries ld = log_derivative(th);
    bool res_ok = ld.valuation() == -1 &&
                  equal_to_truncation(ld.coeff(-1), QExpansion::constant(Scalar::pi()));
    rep.add(detail::exact_check("log-derivative-residue",
                                "theta'/theta has a simple pole with residue pi", res_ok, Q, Y));

    bool fq_ok = true;
    std::string fq_detail;
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
        YSeries f = f_quotient(fam, Y - 2, Q);
        if (!(f.scan_parity() == Parity::Even) ||
            !equal_to_truncation(f.coeff(0), QExpansion::one(f.min_q_trunc())))
            fq_ok = false;
    }
    rep.add(detail::exact_check("f-quotient-unit",
                                "per-root quotients are even with constant term 1", fq_ok, Q, Y));

    // q^0 limits: L-family quotient -> y cot y, W-family -> y/sin y.
    auto q0_part = [](const YSeries& s) {
        YSeries r(s.y_trunc(), s.parity());
        for (const auto& [d, c] : s.terms()) {
            Scalar c0 = c.coeff(0);
            if (!c0.is_zero()) r.set(d, QExpansion::constant(c0));
        }
        return r;
    };
    YSeries fL0 = q0_part(f_quotient(PhiFamily::L, Y - 2, Q));
    YSeries ycot = y_div(y_identity(Y) * ycos(1, Y), ysin(1, Y)).truncated(Y - 2);
    YSeries fW0 = q0_part(f_quotient(PhiFamily::W, Y - 2, Q));
    YSeries ysinv = y_div(y_identity(Y), ysin(1, Y)).truncated(Y - 2);
    bool q0_ok = equal_to_truncation(fL0, ycot) && equal_to_truncation(fW0, ysinv);
    rep.add(detail::exact_check(
        "f-quotient-q0", "q -> 0 limits reduce to y cot y and y/sin y", q0_ok, Q, Y));

    bool combos_ok = true;
    for (LogDerivCombo c : {LogDerivCombo::TmL, LogDerivCombo::TmW, LogDerivCombo::TmWp,
                            LogDerivCombo::XiL, LogDerivCombo::XiW, LogDerivCombo::XiWp}) {
        YSeries s = logderiv_combo(c, Y - 3, Q);
        if (s.valuation() < 1 || s.scan_parity() != Parity::Odd) combos_ok = false;
    }
    rep.add(detail::exact_check(
        "combo-pole-free", "the six log-derivative combinations are odd and pole-free",
        combos_ok, Q, Y));

    bool ufac_ok = true;
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
        if (phi_u_factor(fam, Y - 2, Q).scan_parity() != Parity::Even) ufac_ok = false;
        YSeries t = phi_tilde_u_factor(fam, Y - 2, Q);
        if (t.scan_parity() != Parity::Odd || t.valuation() < 1) ufac_ok = false;
    }
    rep.add(detail::exact_check("u-factor-parity",
                                "twist-bundle quotients are even; their 4k+1 variants odd",
                                ufac_ok, Q, Y));

    // cosh(c/2) with c = 2 sqrt(-1) U agrees with the cos(U) expansion.
    {
        int n = 10;
        YSeries cosh_iu(n, Parity::Even);
        for (int d = 0; d < n; d += 2) {
            // (iU)^d / d!
            Scalar c = Scalar(0, CycloRational::i().pow(d)).scaled(Rational(1) / factorial(d));
            cosh_iu.set(d, QExpansion::constant(c));
        }
        bool cosh_ok = equal_to_truncation(cosh_iu, ycos(1, n));
        rep.add(detail::exact_check("euler-form-convention",
                                    "cosh(c/2) = cos(U) for c = 2 sqrt(-1) U", cosh_ok, Q, n));
    }
    return rep;
}

// --- jacobi ----------------------------------------------------------------

inline VerificationReport suite_jacobi(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "jacobi";
    const long Q = opt.exact_order();
    QExpansion lhs = theta_prime(theta_expand(ThetaFamily::Theta, 3, Q)).coeff(0);
    QExpansion rhs = (theta_nullwert(ThetaFamily::Theta1, Q) *
                      theta_nullwert(ThetaFamily::Theta2, Q) *
                      theta_nullwert(ThetaFamily::Theta3, Q))
                         .scaled(Scalar::pi());
    bool window_ok = lhs.trunc() >= kQDenom * Q && rhs.trunc() >= kQDenom * Q;
    rep.add(detail::exact_check("jacobi-identity",
                                "theta'(0) = pi theta1(0) theta2(0) theta3(0)",
                                equal_to_truncation(lhs, rhs) && !lhs.is_zero() && window_ok,
                                Q));
    return rep;
}

// --- t-laws ----------------------------------------------------------------

inline VerificationReport suite_t_laws(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "t-laws";
    const long Q = opt.exact_order();
    const int Y = opt.y_order > 0 ? opt.y_order : 8;

    YSeries th = theta_expand(ThetaFamily::Theta, Y, Q);
    YSeries th1 = theta_expand(ThetaFamily::Theta1, Y, Q);
    YSeries th2 = theta_expand(ThetaFamily::Theta2, Y, Q);
    YSeries th3 = theta_expand(ThetaFamily::Theta3, Y, Q);
    Scalar z8 = Scalar::zeta8_pow(1);

    rep.add(detail::exact_check("t-law-theta", "theta(v, tau+1) = zeta8 theta(v, tau)",
                                equal_to_truncation(th.tau_shifted(), th.scaled(z8)), Q, Y));
    rep.add(detail::exact_check("t-law-theta1", "theta1(v, tau+1) = zeta8 theta1(v, tau)",
                                equal_to_truncation(th1.tau_shifted(), th1.scaled(z8)), Q, Y));
    rep.add(detail::exact_check("t-law-theta2", "theta2(v, tau+1) = theta3(v, tau)",
                                equal_to_truncation(th2.tau_shifted(), th3), Q, Y));
    rep.add(detail::exact_check("t-law-theta3", "theta3(v, tau+1) = theta2(v, tau)",
                                equal_to_truncation(th3.tau_shifted(), th2), Q, Y));

    rep.add(detail::exact_check(
        "t-law-theta-deriv", "theta'(v, tau+1) = zeta8 theta'(v, tau)",
        equal_to_truncation(theta_prime(th).tau_shifted(), theta_prime(th).scaled(z8)), Q, Y));
    rep.add(detail::exact_check(
        "t-law-theta1-deriv", "theta1'(v, tau+1) = zeta8 theta1'(v, tau)",
        equal_to_truncation(theta_prime(th1).tau_shifted(), theta_prime(th1).scaled(z8)), Q,
        Y));
    rep.add(detail::exact_check(
        "t-law-theta2-deriv", "theta2'(v, tau+1) = theta3'(v, tau)",
        equal_to_truncation(theta_prime(th2).tau_shifted(), theta_prime(th3)), Q, Y));
    rep.add(detail::exact_check(
        "t-law-theta3-deriv", "theta3'(v, tau+1) = theta2'(v, tau)",
        equal_to_truncation(theta_prime(th3).tau_shifted(), theta_prime(th2)), Q, Y));

    rep.add(detail::exact_check(
        "t-law-delta2", "delta2(tau+1) = delta3(tau)",
        equal_to_truncation(t_transform(delta(2, Q)).series, delta(3, Q).series), Q));
    rep.add(detail::exact_check(
        "t-law-epsilon2", "epsilon2(tau+1) = epsilon3(tau)",
        equal_to_truncation(t_transform(epsilon(2, Q)).series, epsilon(3, Q).series), Q));
    rep.add(detail::exact_check(
        "t-law-delta1", "delta1(tau+1) = delta1(tau)",
        equal_to_truncation(t_transform(delta(1, Q)).series, delta(1, Q).series), Q));
    rep.add(detail::exact_check(
        "t-law-involution", "applying T twice returns delta2",
        equal_to_truncation(t_transform(t_transform(delta(2, Q))).series, delta(2, Q).series),
        Q));
    return rep;
}

// --- cs-t-laws --------------------------------------------------------------

inline VerificationReport suite_cs_t_laws(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "cs-t-laws";
    const long Q = opt.exact_order();

    auto add_triple = [&](const std::string& tag, const FormElement& l, const FormElement& w,
                          const FormElement& wp) {
        bool window_ok = l.min_q_trunc() >= kQDenom * Q && w.min_q_trunc() >= kQDenom * Q &&
                         wp.min_q_trunc() >= kQDenom * Q;
        rep.add(detail::exact_check(tag + "-L", "L-family transgression is T-invariant",
                                    window_ok && equal_to_truncation(l.tau_shifted(), l), Q));
        rep.add(detail::exact_check(tag + "-W", "W-family transgression maps to W' under T",
                                    window_ok && equal_to_truncation(w.tau_shifted(), wp), Q));
        rep.add(detail::exact_check(tag + "-Wp", "W'-family transgression maps to W under T",
                                    window_ok && equal_to_truncation(wp.tau_shifted(), w), Q));
    };

    RingSpec low = RingSpec::lower(3, Q);
    add_triple("t-law-cs-tm", cs_tm(PhiFamily::L, low).element, cs_tm(PhiFamily::W, low).element,
               cs_tm(PhiFamily::Wp, low).element);
    add_triple("t-law-cs-xi", cs_xi(PhiFamily::L, low).element, cs_xi(PhiFamily::W, low).element,
               cs_xi(PhiFamily::Wp, low).element);
    RingSpec up = RingSpec::upper(2, Q);
    add_triple("t-law-cs-tilde", cs_tilde(PhiFamily::L, up).element,
               cs_tilde(PhiFamily::W, up).element, cs_tilde(PhiFamily::Wp, up).element);
    return rep;
}

// --- s-laws -----------------------------------------------------------------

inline VerificationReport suite_s_laws(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "s-laws";
    EvalConfig cfg = opt.eval_config();
    auto laws = check_s_laws(cfg);
    auto qlaws = check_quotient_s_laws(cfg);
    laws.insert(laws.end(), qlaws.begin(), qlaws.end());
    for (const auto& l : laws) {
        std::ostringstream det;
        det << "max residual " << l.max_residual;
        rep.add({l.law_id, "modular S-transformation law", l.pass, det.str(),
                 "double precision, J=" + std::to_string(cfg.product_terms), to_json(l)});
    }
    return rep;
}

// --- modform-fourier ---------------------------------------------------------

inline VerificationReport suite_modform_fourier(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "modform-fourier";
    const long Q = opt.q_order > 0 ? opt.q_order : 8;

    struct Fixture {
        const char* id;
        ModularForm form;
        std::vector<std::pair<long, Rational>> lead;
        int weight;
        ModularGroup group;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"delta1", delta(1, Q), {{0, Rational(1, 4)}, {8, Rational(6)}},
                        2, ModularGroup::Gamma0_2});
    fixtures.push_back({"epsilon1", epsilon(1, Q), {{0, Rational(1, 16)}, {8, Rational(-1)}},
                        4, ModularGroup::Gamma0_2});
    fixtures.push_back({"delta2", delta(2, Q), {{0, Rational(-1, 8)}, {4, Rational(-3)}},
                        2, ModularGroup::Gamma_upper0_2});
    fixtures.push_back({"epsilon2", epsilon(2, Q), {{4, Rational(1)}}, 4,
                        ModularGroup::Gamma_upper0_2});
    fixtures.push_back({"delta3", delta(3, Q), {{0, Rational(-1, 8)}, {4, Rational(3)}},
                        2, ModularGroup::GammaTheta});
    fixtures.push_back({"epsilon3", epsilon(3, Q), {{4, Rational(-1)}}, 4,
                        ModularGroup::GammaTheta});

    for (const auto& f : fixtures) {
        bool lead_ok = true;
        for (const auto& [num, val] : f.lead)
            if (!(f.form.series.coeff(num) == Scalar(val))) lead_ok = false;
        bool meta_ok = f.form.weight == f.weight && f.form.group == f.group;
        bool integral = true;
        bool half_grid = true;
        for (const auto& [n, c] : f.form.series.terms()) {
            if (n % 4 != 0) half_grid = false;
            if (n == 0) continue;  // listed constant terms may be rational
            auto deg = c.uniform_pi_degree();
            if (!deg || *deg != 0) integral = false;
            else if (!c.coeff(0).is_rational() || !is_integer(c.coeff(0).rational_part()))
                integral = false;
        }
        rep.add(detail::exact_check(std::string(f.id) + "-fourier",
                                    "leading expansion, weight and group of " + std::string(f.id),
                                    lead_ok && meta_ok, Q));
        rep.add(detail::exact_check(
            std::string(f.id) + "-integrality",
            "higher coefficients are integers on the half-integer grid", integral && half_grid,
            Q));
    }
    return rep;
}

// --- route-crosscheck ---------------------------------------------------------

inline VerificationReport suite_route_crosscheck(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "route-crosscheck";

    struct Config {
        const char* tag;
        RingSpec spec;
        bool tilde;
    };
    long q_small = opt.q_order > 0 ? opt.q_order : 2;
    std::vector<Config> configs = {
        {"k1-D3", RingSpec::lower(1, q_small), false},
        {"k3-D11", RingSpec::lower(3, q_small), false},
        {"k2-D9", RingSpec::upper(2, opt.q_order > 0 ? opt.q_order : 1), true},
    };
    for (const auto& cfg : configs) {
        for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
            FormElement a = cfg.tilde ? phi_tilde_theta_route(fam, cfg.spec)
                                      : phi_theta_route(fam, cfg.spec);
            FormElement b = cfg.tilde ? phi_tilde_bundle_route(fam, cfg.spec)
                                      : phi_bundle_route(fam, cfg.spec);
            bool eq = equal_to_truncation(a, b) && !a.is_zero();
            auto pi_deg = a.uniform_pi_degree();
            bool grade_ok = pi_deg && *pi_deg == 0;
            rep.add(detail::exact_check(
                std::string("route-") + cfg.tag + "-" + name(fam),
                "theta-quotient route equals virtual-bundle route, pi-grade 0",
                eq && grade_ok, cfg.spec.q_order, cfg.spec.dim / 2 + 1));
        }
    }
    return rep;
}

// --- dim3-special --------------------------------------------------------------

inline VerificationReport suite_dim3_special(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "dim3-special";
    const long Q = opt.q_order > 0 ? opt.q_order : 8;

    {
        YSeries combo = logderiv_combo(LogDerivCombo::XiL, 4, Q);
        QExpansion dz0 = combo.v_derivative().coeff(0);
        QExpansion expect = delta(1, Q).series.scaled(Scalar::pi(2).scaled(Rational(8)));
        rep.add(detail::exact_check(
            "dz-combo-delta1",
            "d/dz (theta2'/theta2 + theta3'/theta3 - 2 theta1'/theta1)|_0 = 8 pi^2 delta1",
            equal_to_truncation(dz0, expect), Q));
    }

    RingSpec spec = RingSpec::lower(1, Q);
    Monomial ub{{0}, 1, kOddB};
    struct Case {
        PhiFamily fam;
        int delta_index;
        Rational scale;  // coefficient of U b in units of pi^-2 delta_i
        const char* ref;
    };
    // (1/2pi^2) delta1 * 8Ub for L; (1/8pi^2) delta_i * 8Ub for W, W'.
    std::vector<Case> cases = {{PhiFamily::L, 1, Rational(4), "xi-transgression collapses to (1/2pi^2) delta1"},
                               {PhiFamily::W, 2, Rational(1), "xi-transgression collapses to (1/8pi^2) delta2"},
                               {PhiFamily::Wp, 3, Rational(1), "xi-transgression collapses to (1/8pi^2) delta3"}};
    for (const auto& c : cases) {
        FormElement top = top_component(cs_xi(c.fam, spec));
        bool span_ok = top.terms().size() == 1 && top.terms().begin()->first == ub;
        QExpansion got = top.coeff(ub);
        QExpansion want =
            delta(c.delta_index, Q).series.scaled(Scalar::pi(-2).scaled(c.scale));
        rep.add(detail::exact_check(std::string("dim3-") + name(c.fam), c.ref,
                                    span_ok && equal_to_truncation(got, want), Q));
    }
    return rep;
}

// --- cancellation cases ----------------------------------------------------------

inline VerificationReport suite_cancel(CancelCase c, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = name(c);
    CancellationReport r = derive(c, opt.cancel_order());
    std::string orders = detail::orders_str(r.q_order);
    rep.add({"residual-zero", "two-coefficient solve extends to all computed coefficients",
             r.residual_zero, r.residual_zero ? "exact" : r.failure_detail, orders, {}});
    rep.add({"gamma0-side", "companion identity with the 2^6 factor on the Gamma_0(2) side",
             r.gamma0_side_ok, r.gamma0_side_ok ? "exact" : "mismatch", orders, {}});
    rep.add({"q-integrality", "Gamma_0(2)-side expansion has integer q-exponents",
             r.q_integrality_ok, r.q_integrality_ok ? "exact" : "fractional exponent found",
             orders, {}});
    rep.add({"const-term", "constant-term identity (both sides emitted)", r.const_term_ok,
             r.const_term_ok ? "equal" : "sides differ", orders, to_json(r)});
    rep.add({"display-z0", "computed z0 against the printed expression", true, r.matched_z0,
             orders, {}});
    rep.add({"display-z1", "computed z1 against the printed expressions", true, r.matched_z1,
             orders, {}});
    rep.add({"display-lhs", "computed constant term against the printed left-hand side", true,
             r.matched_lhs, orders, {}});
    return rep;
}

// --- registry --------------------------------------------------------------------

inline std::vector<std::string> suite_tags() {
    return {"theta-basics", "jacobi",          "t-laws",       "s-laws",
            "modform-fourier", "route-crosscheck", "cs-t-laws", "dim3-special",
            "cancel-TM-11", "cancel-XI-11",    "cancel-TILDE-9", "all"};
}

inline VerificationReport run_suite(const std::string& tag, const SuiteOptions& opt) {
    if (tag == "theta-basics") return suite_theta_basics(opt);
    if (tag == "jacobi") return suite_jacobi(opt);
    if (tag == "t-laws") return suite_t_laws(opt);
    if (tag == "s-laws") return suite_s_laws(opt);
    if (tag == "modform-fourier") return suite_modform_fourier(opt);
    if (tag == "route-crosscheck") return suite_route_crosscheck(opt);
    if (tag == "cs-t-laws") return suite_cs_t_laws(opt);
    if (tag == "dim3-special") return suite_dim3_special(opt);
    if (tag == "cancel-TM-11") return suite_cancel(CancelCase::TM11, opt);
    if (tag == "cancel-XI-11") return suite_cancel(CancelCase::XI11, opt);
    if (tag == "cancel-TILDE-9") return suite_cancel(CancelCase::TILDE9, opt);
    if (tag == "all") {
        VerificationReport rep;
        rep.suite = "all";
        for (const auto& t : suite_tags())
            if (t != "all") rep.merge(run_suite(t, opt));
        return rep;
    }
    throw std::invalid_argument("unknown suite tag: " + tag);
}

}  // namespace transverify
