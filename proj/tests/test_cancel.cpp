#include "transverify/json_io.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace transverify;

TEST_CASE("insufficient order is rejected") {
    CHECK_THROWS_AS(derive(CancelCase::TM11, 1), InsufficientOrderError);
}

TEST_CASE("TM-11 derivation") {
    CancellationReport rep = derive(CancelCase::TM11, 2);
    CHECK(rep.residual_zero);
    CHECK(rep.gamma0_side_ok);
    CHECK(rep.const_term_ok);
    CHECK(rep.q_integrality_ok);
    CHECK(rep.z0.is_q_constant());
    CHECK(rep.z1.is_q_constant());
    // the solved coefficients reproduce the printed expressions; the sine
    // term matches the R/2pi variant
    CHECK(rep.matched_z0.find("matches -[Ahat cosh") == 0);
    CHECK(rep.matched_z1.find("sin(R/2pi)") != std::string::npos);
    CHECK(rep.matched_lhs.find("matches sqrt2 [Lhat/cosh^2") == 0);
}

TEST_CASE("XI-11 derivation") {
    CancellationReport rep = derive(CancelCase::XI11, 2);
    CHECK(rep.ok());
    CHECK(rep.matched_z0.find("matches +[Ahat cos") == 0);
    // the computed constant is -67, not the printed 77
    CHECK(rep.matched_z1.find("- 67") != std::string::npos);
}

TEST_CASE("TILDE-9 derivation") {
    CancellationReport rep = derive(CancelCase::TILDE9, 2);
    CHECK(rep.ok());
    CHECK(rep.matched_z0.find("matches -[Ahat (1-cosh") == 0);
    // the computed constant is 63, not the printed 61
    CHECK(rep.matched_z1.find("+ 63") != std::string::npos);
    CHECK(rep.matched_lhs.find("matches sqrt2 [Lhat sinh") == 0);
}

TEST_CASE("report serialization carries the fixed schema") {
    CancellationReport rep = derive(CancelCase::TM11, 2);
    Json j = to_json(rep);
    for (const char* key : {"case", "q_order", "residual_zero", "gamma0_side",
                            "const_term_equal", "q_integrality", "pass", "z0", "z1",
                            "lhs_const", "rhs_const", "matched_display"})
        CHECK(j.contains(key));
    CHECK(j["pass"].get<bool>());
    // FormElement dumps: [{monomial: {X, U, odd}, coeff: {denom, trunc_num, terms}}]
    REQUIRE(j["z0"].is_array());
    REQUIRE_FALSE(j["z0"].empty());
    const Json& t = j["z0"][0];
    CHECK(t.contains("monomial"));
    CHECK(t["monomial"].contains("X"));
    CHECK(t["monomial"].contains("U"));
    CHECK(t["monomial"].contains("odd"));
    CHECK(t["coeff"]["denom"].get<int>() == 8);
    CHECK(t["coeff"].contains("trunc_num"));
    CHECK(t["coeff"]["terms"][0].contains("num"));
    CHECK(t["coeff"]["terms"][0]["coeff"][0].contains("pi_degree"));
    CHECK(t["coeff"]["terms"][0]["coeff"][0]["zeta8"].size() == 4);
}

TEST_CASE("constant-term sides are emitted and equal") {
    CancellationReport rep = derive(CancelCase::TM11, 2);
    CHECK_FALSE(rep.lhs_const.is_zero());
    CHECK(equal_to_truncation(rep.lhs_const, rep.rhs_const));
    // rhs_const = 2^9 z0 + 2^3 z1 evaluated at the constant terms
    FormElement want = rep.z0.scaled(Rational(512)) + rep.z1.scaled(Rational(8));
    CHECK(equal_to_truncation(rep.rhs_const, want));
}

TEST_CASE("scaling the inputs scales the solved coefficients") {
    const long Q = 2;
    RingSpec spec = RingSpec::lower(3, Q);
    FormElement w = top_component(cs_tm(PhiFamily::W, spec));
    FormElement l = top_component(cs_tm(PhiFamily::L, spec));
    CancellationReport base = decompose_pair("scaled", w, l, spec);

    std::mt19937 rng(20240821);
    std::uniform_int_distribution<long> num(1, 9);
    for (int i = 0; i < 5; ++i) {
        Rational f(num(rng), num(rng));
        CancellationReport scaled =
            decompose_pair("scaled", w.scaled(f), l.scaled(f), spec);
        CHECK(scaled.residual_zero);
        CHECK(scaled.gamma0_side_ok);
        CHECK(equal_to_truncation(scaled.z0, base.z0.scaled(f)));
        CHECK(equal_to_truncation(scaled.z1, base.z1.scaled(f)));
    }
}

TEST_CASE("S-relation of the top components, numerically") {
    // The source of the 2^6 factor: {CS_L}^(D) at -1/tau equals
    // (2 tau)^6 {CS_W}^(D) at tau, coefficient by coefficient.
    const long Q = 8;
    const Complex tau(0.0, 1.1);
    const Complex s = -1.0 / tau;
    const Complex f = std::pow(2.0 * tau, 6);

    auto worst_residual = [&](const FormElement& l, const FormElement& w) {
        double worst = 0.0;
        for (const auto& [m, c] : l.terms()) {
            Complex lhs = c.eval(s).value;
            Complex rhs = f * w.coeff(m).eval(tau).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
        return worst;
    };

    RingSpec low = RingSpec::lower(3, Q);
    CHECK(worst_residual(top_component(cs_tm(PhiFamily::L, low)),
                         top_component(cs_tm(PhiFamily::W, low))) < 1e-9);
    CHECK(worst_residual(top_component(cs_xi(PhiFamily::L, low)),
                         top_component(cs_xi(PhiFamily::W, low))) < 1e-9);
    RingSpec up = RingSpec::upper(2, Q);
    CHECK(worst_residual(top_component(cs_tilde(PhiFamily::L, up)),
                         top_component(cs_tilde(PhiFamily::W, up))) < 1e-9);
}

TEST_CASE("decomposition failure is reported with the offending exponent") {
    const long Q = 2;
    RingSpec spec = RingSpec::lower(3, Q);
    FormElement w = top_component(cs_tm(PhiFamily::W, spec));
    FormElement l = top_component(cs_tm(PhiFamily::L, spec));
    // perturb one coefficient off the weight-6 span
    auto first = w.terms().begin()->first;
    FormElement bad = w;
    QExpansion c = bad.coeff(first);
    c.add_term(12, Scalar(1L));
    bad.set(first, c);
    CancellationReport rep = decompose_pair("perturbed", bad, l, spec);
    CHECK_FALSE(rep.residual_zero);
    CHECK(rep.failure_detail.find("q-exponent") != std::string::npos);
}
