#include "transverify/modforms.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace transverify;

TEST_CASE("fourier expansions match the listed leading terms") {
    const long Q = 8;
    ModularForm d1 = delta(1, Q), d2 = delta(2, Q), d3 = delta(3, Q);
    ModularForm e1 = epsilon(1, Q), e2 = epsilon(2, Q), e3 = epsilon(3, Q);

    CHECK(d1.series.coeff(0) == Scalar(Rational(1, 4)));
    CHECK(d1.series.coeff(8) == Scalar(6L));
    CHECK(e1.series.coeff(0) == Scalar(Rational(1, 16)));
    CHECK(e1.series.coeff(8) == Scalar(-1L));
    CHECK(d2.series.coeff(0) == Scalar(Rational(-1, 8)));
    CHECK(d2.series.coeff(4) == Scalar(-3L));
    CHECK(e2.series.coeff(0).is_zero());
    CHECK(e2.series.coeff(4) == Scalar(1L));
    CHECK(d3.series.coeff(0) == Scalar(Rational(-1, 8)));
    CHECK(d3.series.coeff(4) == Scalar(3L));
    CHECK(e3.series.coeff(4) == Scalar(-1L));

    SECTION("weights and groups") {
        CHECK(d1.weight == 2);
        CHECK(e1.weight == 4);
        CHECK(d1.group == ModularGroup::Gamma0_2);
        CHECK(d2.group == ModularGroup::Gamma_upper0_2);
        CHECK(d3.group == ModularGroup::GammaTheta);
    }
    SECTION("higher coefficients are integral") {
        for (const ModularForm* f : {&d1, &d2, &d3, &e1, &e2, &e3}) {
            for (const auto& [n, c] : f->series.terms()) {
                CHECK(n % 4 == 0);  // exponents in (1/2)Z
                if (n == 0) continue;
                CHECK(c.is_monomial());
                CHECK(c.uniform_pi_degree().value() == 0);
                CHECK(is_integer(c.coeff(0).rational_part()));
            }
        }
    }
}

TEST_CASE("T-transformation table") {
    const long Q = 6;
    CHECK(equal_to_truncation(t_transform(delta(2, Q)).series, delta(3, Q).series));
    CHECK(equal_to_truncation(t_transform(epsilon(2, Q)).series, epsilon(3, Q).series));
    CHECK(t_transform(delta(2, Q)).group == ModularGroup::GammaTheta);
    // the swap is an involution
    ModularForm twice = t_transform(t_transform(delta(2, Q)));
    CHECK(equal_to_truncation(twice.series, delta(2, Q).series));
    CHECK(twice.group == ModularGroup::Gamma_upper0_2);
    // weight metadata survives
    CHECK(t_transform(epsilon(3, Q)).weight == 4);
}

TEST_CASE("weight-6 basis decomposition") {
    const long Q = 6;

    SECTION("basis elements decompose to unit vectors") {
        QExpansion d2_8 = delta(2, Q).series.scaled(Rational(8));
        auto dec = basis_decompose(d2_8.pow(3), 6, Q);
        REQUIRE(dec.ok);
        CHECK(dec.terms[0].coeff == Scalar::one());
        CHECK(dec.terms[1].coeff.is_zero());

        auto dec2 = basis_decompose(d2_8 * epsilon(2, Q).series, 6, Q);
        REQUIRE(dec2.ok);
        CHECK(dec2.terms[0].coeff.is_zero());
        CHECK(dec2.terms[1].coeff == Scalar::one());
    }

    SECTION("round trip on random rational pairs") {
        std::mt19937 rng(20240819);
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(1, 12);
        for (int i = 0; i < 100; ++i) {
            Scalar z0(Rational(num(rng), den(rng)));
            Scalar z1(Rational(num(rng), den(rng)));
            QExpansion f = basis_build({{3, 0, z0}, {1, 1, z1}}, Q);
            auto dec = basis_decompose(f, 6, Q);
            REQUIRE(dec.ok);
            CHECK(dec.terms[0].coeff == z0);
            CHECK(dec.terms[1].coeff == z1);
        }
    }

    SECTION("inputs outside the span are rejected with a residual") {
        QExpansion f = basis_build({{3, 0, Scalar(1L)}}, Q);
        f.add_term(12, Scalar(5L));  // q^(3/2) perturbation
        auto dec = basis_decompose(f, 6, Q);
        CHECK_FALSE(dec.ok);
        CHECK(dec.residual.valuation() == 12);
    }

    SECTION("exponents off the half-integer grid are rejected") {
        QExpansion f = QExpansion::monomial(3, Scalar(1L), 48);
        CHECK_THROWS_AS(basis_decompose(f, 6, 6), std::invalid_argument);
    }
}
