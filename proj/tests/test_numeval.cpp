#include "transverify/json_io.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace transverify;

TEST_CASE("point evaluation basics") {
    EvalConfig cfg;

    SECTION("theta vanishes at v = 0") {
        for (const auto& tau : cfg.tau_samples)
            CHECK(std::abs(theta_eval(ThetaFamily::Theta, 0.0, tau, cfg)) < 1e-14);
    }
    SECTION("odd parity of theta at random samples") {
        std::mt19937 rng(20240822);
        std::uniform_real_distribution<double> u(-0.4, 0.4);
        for (int i = 0; i < 25; ++i) {
            Complex v(u(rng), u(rng) * 0.3);
            Complex tau(u(rng), 1.0 + 0.5 * std::abs(u(rng)));
            Complex a = theta_eval(ThetaFamily::Theta, -v, tau, cfg);
            Complex b = -theta_eval(ThetaFamily::Theta, v, tau, cfg);
            CHECK(std::abs(a - b) < 1e-13);
        }
    }
    SECTION("jacobi identity numerically") {
        Complex tau(0.0, 1.0);
        Complex lhs = theta_deriv_eval(ThetaFamily::Theta, 0.0, tau, cfg);
        Complex rhs = M_PI * theta_eval(ThetaFamily::Theta1, 0.0, tau, cfg) *
                      theta_eval(ThetaFamily::Theta2, 0.0, tau, cfg) *
                      theta_eval(ThetaFamily::Theta3, 0.0, tau, cfg);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    SECTION("domain errors") {
        CHECK_THROWS_AS(theta_eval(ThetaFamily::Theta, 0.0, Complex(0.1, -0.2), cfg),
                        std::domain_error);
    }
    SECTION("tau samples below the floor are rejected") {
        EvalConfig bad;
        bad.tau_samples = {{0.0, 0.2}};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}

TEST_CASE("derivative evaluator against finite differences") {
    EvalConfig cfg;
    const double h = 1e-6;
    for (ThetaFamily fam : {ThetaFamily::Theta, ThetaFamily::Theta1, ThetaFamily::Theta2,
                            ThetaFamily::Theta3}) {
        Complex v(0.21, 0.04), tau(0.3, 1.2);
        Complex num = (theta_eval(fam, v + h, tau, cfg) - theta_eval(fam, v - h, tau, cfg)) /
                      (2.0 * h);
        Complex ana = theta_deriv_eval(fam, v, tau, cfg);
        CHECK(std::abs(num - ana) < 1e-7);
    }
}

TEST_CASE("S-transformation laws") {
    EvalConfig cfg;
    for (const auto& law : check_s_laws(cfg)) {
        INFO(law.law_id << " residual " << law.max_residual);
        CHECK(law.pass);
        CHECK(law.max_residual < 1e-9);
    }
}

TEST_CASE("quotient S-laws") {
    EvalConfig cfg;
    for (const auto& law : check_quotient_s_laws(cfg)) {
        INFO(law.law_id << " residual " << law.max_residual);
        CHECK(law.pass);
        CHECK(law.max_residual < 1e-9);
    }
}

TEST_CASE("exact and numeric kernels agree") {
    EvalConfig cfg;
    for (ThetaFamily fam : {ThetaFamily::Theta, ThetaFamily::Theta1, ThetaFamily::Theta2,
                            ThetaFamily::Theta3}) {
        double worst = kernel_agreement(fam, cfg);
        INFO(name(fam) << " worst " << worst);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("fourier probe of delta1") {
    EvalConfig cfg;
    CHECK(delta1_fourier_probe(cfg) < 1e-6);
}

TEST_CASE("residual reports carry the fixed schema") {
    EvalConfig cfg;
    auto laws = check_s_laws(cfg);
    REQUIRE_FALSE(laws.empty());
    Json j = to_json(laws.front());
    for (const char* key : {"law_id", "samples", "max_residual", "pass"}) CHECK(j.contains(key));
    REQUIRE_FALSE(j["samples"].empty());
    for (const char* key : {"v", "tau", "lhs", "rhs", "residual"})
        CHECK(j["samples"][0].contains(key));
}
