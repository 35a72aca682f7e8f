#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "transverify/modforms.hpp"

namespace transverify {

/**
 * Floating-point theta kernel: truncated product evaluation on the upper
 * half plane. Together with the exact expansions it forms a mutual-oracle
 * pair, and it carries every S-transformation check that a truncated
 * q-series cannot express (q -> e^{-2 pi i / tau} is not a Puiseux map).
 */
struct EvalConfig {
    int product_terms = 40;
    std::vector<Complex> tau_samples = {{0.0, 1.1}, {0.3, 1.2}, {-0.4, 0.9}};
    std::vector<Complex> v_samples = {{0.17, 0.05}, {0.31, -0.08}, {0.0, 0.22}};
    double tol = 1e-9;

    void validate() const {
        for (const auto& t : tau_samples)
            if (t.imag() < 0.5)
                throw std::invalid_argument("EvalConfig: tau samples need Im >= 0.5");
    }
};

namespace detail {

inline void require_upper(Complex tau) {
    if (tau.imag() <= 0.0)
        throw std::domain_error("theta_eval: Im(tau) must be positive");
}

}  // namespace detail

inline Complex theta_eval(ThetaFamily fam, Complex v, Complex tau, const EvalConfig& cfg) {
    detail::require_upper(tau);
    const Complex two_pi_i(0.0, 2.0 * M_PI);
    Complex q = std::exp(two_pi_i * tau);
    Complex ep = std::exp(two_pi_i * v);
    Complex em = std::exp(-two_pi_i * v);
    Complex acc;
    switch (fam) {
        case ThetaFamily::Theta:
        case ThetaFamily::Theta1: {
            double sgn = (fam == ThetaFamily::Theta) ? -1.0 : 1.0;
            acc = 2.0 * std::exp(two_pi_i * tau / 8.0);
            acc *= (fam == ThetaFamily::Theta) ? std::sin(M_PI * v) : std::cos(M_PI * v);
            Complex qj = 1.0;
            for (int j = 1; j <= cfg.product_terms; ++j) {
                qj *= q;
                acc *= (1.0 - qj) * (1.0 + sgn * ep * qj) * (1.0 + sgn * em * qj);
            }
            return acc;
        }
        case ThetaFamily::Theta2:
        case ThetaFamily::Theta3: {
            double sgn = (fam == ThetaFamily::Theta2) ? -1.0 : 1.0;
            acc = 1.0;
            Complex qj = 1.0;
            for (int j = 1; j <= cfg.product_terms; ++j) {
                qj *= q;
                Complex qh = qj * std::exp(-two_pi_i * tau / 2.0);  // q^(j-1/2)
                acc *= (1.0 - qj) * (1.0 + sgn * ep * qh) * (1.0 + sgn * em * qh);
            }
            return acc;
        }
    }
    throw std::logic_error("theta_eval: bad family");
}

/**
 * d theta / d v via the analytically differentiated product (log-derivative
 * sums), never finite differences. Regular at v = 0 for every family.
 */
inline Complex theta_deriv_eval(ThetaFamily fam, Complex v, Complex tau,
                                const EvalConfig& cfg) {
    detail::require_upper(tau);
    const Complex two_pi_i(0.0, 2.0 * M_PI);
    Complex q = std::exp(two_pi_i * tau);
    Complex ep = std::exp(two_pi_i * v);
    Complex em = std::exp(-two_pi_i * v);
    double sgn = (fam == ThetaFamily::Theta || fam == ThetaFamily::Theta2) ? -1.0 : 1.0;
    bool half = (fam == ThetaFamily::Theta2 || fam == ThetaFamily::Theta3);

    Complex prod = 1.0;   // the j-indexed product
    Complex dlog = 0.0;   // its v-log-derivative
    Complex qj = 1.0;
    for (int j = 1; j <= cfg.product_terms; ++j) {
        qj *= q;
        Complex t = half ? qj * std::exp(-two_pi_i * tau / 2.0) : qj;
        Complex fp = 1.0 + sgn * ep * t;
        Complex fm = 1.0 + sgn * em * t;
        prod *= (1.0 - qj) * fp * fm;
        dlog += two_pi_i * sgn * (ep * t / fp - em * t / fm);
    }
    switch (fam) {
        case ThetaFamily::Theta: {
            Complex pre = 2.0 * std::exp(two_pi_i * tau / 8.0);
            return pre * (M_PI * std::cos(M_PI * v) * prod + std::sin(M_PI * v) * prod * dlog);
        }
        case ThetaFamily::Theta1: {
            Complex pre = 2.0 * std::exp(two_pi_i * tau / 8.0);
            return pre * (-M_PI * std::sin(M_PI * v) * prod + std::cos(M_PI * v) * prod * dlog);
        }
        case ThetaFamily::Theta2:
        case ThetaFamily::Theta3:
            return prod * dlog;
    }
    throw std::logic_error("theta_deriv_eval: bad family");
}

struct SampleResidual {
    Complex v, tau, lhs, rhs;
    double residual;
};

struct LawResult {
    std::string law_id;
    std::vector<SampleResidual> samples;
    double max_residual = 0.0;
    bool pass = true;
};

namespace detail {

inline double rel_residual(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

template <typename LhsFn, typename RhsFn>
LawResult run_law(const std::string& id, const EvalConfig& cfg, bool use_v, LhsFn&& lhs_fn,
                  RhsFn&& rhs_fn) {
    LawResult r;
    r.law_id = id;
    std::vector<Complex> vs = use_v ? cfg.v_samples : std::vector<Complex>{{0.0, 0.0}};
    for (const auto& tau : cfg.tau_samples) {
        for (const auto& v : vs) {
            Complex lhs = lhs_fn(v, tau);
            Complex rhs = rhs_fn(v, tau);
            double res = rel_residual(lhs, rhs);
            r.samples.push_back({v, tau, lhs, rhs, res});
            r.max_residual = std::max(r.max_residual, res);
        }
    }
    r.pass = r.max_residual < cfg.tol;
    return r;
}

// Principal branch of (tau/i)^(1/2); tau/i lies in the right half plane
// whenever Im(tau) > 0, where the principal square root is continuous.
inline Complex sqrt_tau_over_i(Complex tau) {
    return std::sqrt(tau * Complex(0.0, -1.0));
}

inline Complex s_factor(Complex v, Complex tau) {
    const Complex i(0.0, 1.0);
    return sqrt_tau_over_i(tau) * std::exp(i * M_PI * tau * v * v);
}

}  // namespace detail

/**
 * The modular S-transformation laws of the four theta functions, their
 * v-derivatives, the derivative nullwert law and the weight-2/weight-4
 * laws relating delta2/epsilon2 to delta1/epsilon1.
 */
inline std::vector<LawResult> check_s_laws(const EvalConfig& cfg, long modform_q_order = 8) {
    cfg.validate();
    using detail::run_law;
    using detail::s_factor;
    const Complex i(0.0, 1.0);
    const Complex two_pi_i(0.0, 2.0 * M_PI);
    std::vector<LawResult> out;

    auto s_tau = [](Complex tau) { return -1.0 / tau; };

    struct ThetaPair {
        const char* id;
        ThetaFamily lhs_fam;
        ThetaFamily rhs_fam;
        bool extra_inv_i;
    };
    // theta -> theta, theta1 <-> theta2, theta3 -> theta3 under S.
    const ThetaPair pairs[] = {
        {"s-law-theta", ThetaFamily::Theta, ThetaFamily::Theta, true},
        {"s-law-theta1", ThetaFamily::Theta1, ThetaFamily::Theta2, false},
        {"s-law-theta2", ThetaFamily::Theta2, ThetaFamily::Theta1, false},
        {"s-law-theta3", ThetaFamily::Theta3, ThetaFamily::Theta3, false},
    };
    for (const auto& p : pairs) {
        out.push_back(run_law(
            p.id, cfg, true,
            [&](Complex v, Complex tau) { return theta_eval(p.lhs_fam, v, s_tau(tau), cfg); },
            [&](Complex v, Complex tau) {
                Complex f = s_factor(v, tau) * theta_eval(p.rhs_fam, tau * v, tau, cfg);
                return p.extra_inv_i ? f / i : f;
            }));
    }
    for (const auto& p : pairs) {
        out.push_back(run_law(
            std::string(p.id) + "-deriv", cfg, true,
            [&](Complex v, Complex tau) {
                return theta_deriv_eval(p.lhs_fam, v, s_tau(tau), cfg);
            },
            [&](Complex v, Complex tau) {
                Complex f = s_factor(v, tau) *
                            (two_pi_i * tau * v * theta_eval(p.rhs_fam, tau * v, tau, cfg) +
                             tau * theta_deriv_eval(p.rhs_fam, tau * v, tau, cfg));
                return p.extra_inv_i ? f / i : f;
            }));
    }
    // theta'(0, -1/tau) = (1/i)(tau/i)^(1/2) tau theta'(0, tau)
    out.push_back(run_law(
        "s-law-theta-prime-null", cfg, false,
        [&](Complex, Complex tau) {
            return theta_deriv_eval(ThetaFamily::Theta, 0.0, s_tau(tau), cfg);
        },
        [&](Complex, Complex tau) {
            return detail::sqrt_tau_over_i(tau) / i * tau *
                   theta_deriv_eval(ThetaFamily::Theta, 0.0, tau, cfg);
        }));
    // delta2(-1/tau) = tau^2 delta1(tau), epsilon2(-1/tau) = tau^4 epsilon1(tau),
    // evaluated through the exact expansions.
    QExpansion d1 = delta(1, modform_q_order).series;
    QExpansion d2 = delta(2, modform_q_order).series;
    QExpansion e1 = epsilon(1, modform_q_order).series;
    QExpansion e2 = epsilon(2, modform_q_order).series;
    out.push_back(run_law(
        "s-law-delta2", cfg, false,
        [&](Complex, Complex tau) { return d2.eval(s_tau(tau)).value; },
        [&](Complex, Complex tau) { return tau * tau * d1.eval(tau).value; }));
    out.push_back(run_law(
        "s-law-epsilon2", cfg, false,
        [&](Complex, Complex tau) { return e2.eval(s_tau(tau)).value; },
        [&](Complex, Complex tau) { return tau * tau * tau * tau * e1.eval(tau).value; }));
    return out;
}

/**
 * The S-laws of the quotient expressions feeding the transgressed forms:
 * the per-root factor, its log-derivative combination, the twist factor
 * and the three-term xi combination.
 */
inline std::vector<LawResult> check_quotient_s_laws(const EvalConfig& cfg) {
    cfg.validate();
    using detail::run_law;
    std::vector<LawResult> out;
    auto s_tau = [](Complex tau) { return -1.0 / tau; };
    auto th = [&](ThetaFamily f, Complex v, Complex tau) { return theta_eval(f, v, tau, cfg); };
    auto dth = [&](ThetaFamily f, Complex v, Complex tau) {
        return theta_deriv_eval(f, v, tau, cfg);
    };

    out.push_back(run_law(
        "s-law-f-quotient", cfg, true,
        [&](Complex z, Complex tau) {
            Complex st = s_tau(tau);
            return z * dth(ThetaFamily::Theta, 0.0, st) / th(ThetaFamily::Theta, z, st) *
                   th(ThetaFamily::Theta1, z, st) / th(ThetaFamily::Theta1, 0.0, st);
        },
        [&](Complex z, Complex tau) {
            Complex tz = tau * z;
            return tz * dth(ThetaFamily::Theta, 0.0, tau) / th(ThetaFamily::Theta, tz, tau) *
                   th(ThetaFamily::Theta2, tz, tau) / th(ThetaFamily::Theta2, 0.0, tau);
        }));
    out.push_back(run_law(
        "s-law-logderiv-combo", cfg, true,
        [&](Complex z, Complex tau) {
            Complex st = s_tau(tau);
            return 1.0 / z - dth(ThetaFamily::Theta, z, st) / th(ThetaFamily::Theta, z, st) +
                   dth(ThetaFamily::Theta1, z, st) / th(ThetaFamily::Theta1, z, st);
        },
        [&](Complex z, Complex tau) {
            Complex tz = tau * z;
            return tau * (1.0 / tz -
                          dth(ThetaFamily::Theta, tz, tau) / th(ThetaFamily::Theta, tz, tau) +
                          dth(ThetaFamily::Theta2, tz, tau) / th(ThetaFamily::Theta2, tz, tau));
        }));
    out.push_back(run_law(
        "s-law-u-factor", cfg, true,
        [&](Complex u, Complex tau) {
            Complex st = s_tau(tau);
            Complex t1_0 = th(ThetaFamily::Theta1, 0.0, st);
            Complex t1_u = th(ThetaFamily::Theta1, u, st);
            return t1_0 * t1_0 / (t1_u * t1_u) * th(ThetaFamily::Theta3, u, st) /
                   th(ThetaFamily::Theta3, 0.0, st) * th(ThetaFamily::Theta2, u, st) /
                   th(ThetaFamily::Theta2, 0.0, st);
        },
        [&](Complex u, Complex tau) {
            Complex tu = tau * u;
            Complex t2_0 = th(ThetaFamily::Theta2, 0.0, tau);
            Complex t2_u = th(ThetaFamily::Theta2, tu, tau);
            return t2_0 * t2_0 / (t2_u * t2_u) * th(ThetaFamily::Theta3, tu, tau) /
                   th(ThetaFamily::Theta3, 0.0, tau) * th(ThetaFamily::Theta1, tu, tau) /
                   th(ThetaFamily::Theta1, 0.0, tau);
        }));
    out.push_back(run_law(
        "s-law-xi-combo", cfg, true,
        [&](Complex z, Complex tau) {
            Complex st = s_tau(tau);
            return dth(ThetaFamily::Theta2, z, st) / th(ThetaFamily::Theta2, z, st) +
                   dth(ThetaFamily::Theta3, z, st) / th(ThetaFamily::Theta3, z, st) -
                   2.0 * dth(ThetaFamily::Theta1, z, st) / th(ThetaFamily::Theta1, z, st);
        },
        [&](Complex z, Complex tau) {
            Complex tz = tau * z;
            return tau * (dth(ThetaFamily::Theta1, tz, tau) / th(ThetaFamily::Theta1, tz, tau) +
                          dth(ThetaFamily::Theta3, tz, tau) / th(ThetaFamily::Theta3, tz, tau) -
                          2.0 * dth(ThetaFamily::Theta2, tz, tau) /
                              th(ThetaFamily::Theta2, tz, tau));
        }));
    return out;
}

/**
 * Exact kernel vs numeric kernel: sums the two-variable expansion at a
 * sample point and compares with the product evaluation. The two
 * implementations are independent and serve as mutual oracles.
 */
inline double kernel_agreement(ThetaFamily fam, const EvalConfig& cfg, int y_order = 16,
                               long q_order = 6) {
    cfg.validate();
    YSeries s = theta_expand(fam, y_order, q_order);
    double worst = 0.0;
    for (const auto& tau : cfg.tau_samples) {
        for (const auto& v : cfg.v_samples) {
            Complex y = M_PI * v;
            Complex exact = 0.0;
            Complex yp = 1.0;
            int last = 0;
            for (const auto& [d, c] : s.terms()) {
                for (; last < d; ++last) yp *= y;
                exact += c.eval(tau).value * yp;
            }
            Complex numeric = theta_eval(fam, v, tau, cfg);
            worst = std::max(worst, std::abs(exact - numeric));
        }
    }
    return worst;
}

// Discrete q-derivative probe of delta1 near q = 0 against the exact
// linear coefficient 6.
inline double delta1_fourier_probe(const EvalConfig& cfg) {
    Complex tau(0.0, 3.0);
    Complex q = std::exp(Complex(0.0, 2.0 * M_PI) * tau);
    auto nw4 = [&](ThetaFamily f) {
        Complex x = theta_eval(f, 0.0, tau, cfg);
        return x * x * x * x;
    };
    Complex d1 = (nw4(ThetaFamily::Theta2) + nw4(ThetaFamily::Theta3)) / 8.0;
    Complex est = (d1 - 0.25) / q;
    return std::abs(est - 6.0);
}

}  // namespace transverify
