#include "transverify/phiforms.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace transverify;

namespace {

Monomial mono(const RingSpec& spec, std::vector<int> x, int u = 0, int odd = kOddNone) {
    x.resize(spec.n_roots, 0);
    return Monomial{std::move(x), u, odd};
}

}  // namespace

TEST_CASE("ring basics") {
    RingSpec spec = RingSpec::lower(3, 2);  // D = 11, 5 roots

    FormElement x1(spec);
    x1.set(mono(spec, {1}), QExpansion::one());

    SECTION("X1^6 = 0 in dimension 11") {
        FormElement p = FormElement::one(spec);
        for (int i = 0; i < 6; ++i) p *= x1;
        CHECK(p.is_zero());
    }
    SECTION("two odd factors annihilate") {
        FormElement a0(spec), b(spec);
        a0.set(mono(spec, {}, 0, 0), QExpansion::one());
        b.set(mono(spec, {}, 0, kOddB), QExpansion::one());
        CHECK((a0 * b).is_zero());
        CHECK_FALSE((a0 * x1).is_zero());
    }
    SECTION("(1 + X1)(1 - X1) = 1 - X1^2") {
        FormElement one = FormElement::one(spec);
        FormElement want = one - x1 * x1;
        CHECK(equal_to_truncation((one + x1) * (one - x1), want));
    }
    SECTION("mixed ring configurations are rejected") {
        RingSpec other = RingSpec::lower(2, 2);
        FormElement y(other);
        CHECK_THROWS_AS(x1 + y, std::invalid_argument);
    }
}

TEST_CASE("substitution") {
    RingSpec spec = RingSpec::lower(1, 2);  // D = 3

    SECTION("nilpotence truncates the series") {
        YSeries f = f_quotient(PhiFamily::L, 4, 2);
        FormElement e = substitute_x(f, spec, 0);
        // only degrees 0 and 1 in X survive at D = 3
        for (const auto& [m, c] : e.terms()) CHECK(m.x[0] <= 1);
    }
    SECTION("constant series maps to the ring unit") {
        YSeries one = YSeries::constant(QExpansion::one(), 4);
        CHECK(equal_to_truncation(substitute_u(one, spec), FormElement::one(spec)));
    }
    SECTION("poles are rejected") {
        YSeries pole = YSeries::monomial(-1, QExpansion::one(), 4);
        CHECK_THROWS_AS(substitute_u(pole, spec), std::invalid_argument);
    }
    SECTION("a short series is rejected rather than silently truncated") {
        RingSpec big = RingSpec::lower(3, 2);
        YSeries shorty = YSeries::constant(QExpansion::one(), 3);
        CHECK_THROWS_AS(substitute_x(shorty, big, 0), std::invalid_argument);
    }
}

TEST_CASE("route equivalence") {
    SECTION("k = 1, D = 3") {
        RingSpec spec = RingSpec::lower(1, 2);
        for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
            FormElement a = phi_theta_route(fam, spec);
            FormElement b = phi_bundle_route(fam, spec);
            CHECK_FALSE(a.is_zero());
            CHECK(equal_to_truncation(a, b));
        }
    }
    SECTION("tilde, k = 1, D = 5") {
        RingSpec spec = RingSpec::upper(1, 1);
        for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
            FormElement a = phi_tilde_theta_route(fam, spec);
            FormElement b = phi_tilde_bundle_route(fam, spec);
            CHECK_FALSE(a.is_zero());
            CHECK(equal_to_truncation(a, b));
        }
    }
}

TEST_CASE("phi forms are graded correctly") {
    RingSpec spec = RingSpec::lower(1, 2);
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
        FormElement phi = phi_theta_route(fam, spec);
        auto deg = phi.uniform_pi_degree();
        REQUIRE(deg.has_value());
        CHECK(*deg == 0);
        // even degrees only, constant term equals the prefactor
        for (const auto& [m, c] : phi.terms()) {
            CHECK(m.degree() % 2 == 0);
            CHECK(m.odd == kOddNone);
        }
        Monomial unit = mono(spec, {});
        Scalar c0 = phi.coeff(unit).coeff(0);
        if (fam == PhiFamily::L)
            CHECK(c0 == Scalar(0, CycloRational::sqrt2().pow(3)));
        else
            CHECK(c0 == Scalar::one());
    }
}

TEST_CASE("sqrt2 powers are exactly representable") {
    CycloRational s11 = CycloRational::sqrt2().pow(11);
    // sqrt(2)^11 = 32 sqrt(2) = 32 (zeta8 - zeta8^3)
    CycloRational want = CycloRational(Rational(0), Rational(32), Rational(0), Rational(-32));
    CHECK(s11 == want);
}

TEST_CASE("symmetric function invariance") {
    RingSpec spec = RingSpec::lower(3, 1);
    std::mt19937 rng(20240820);
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W}) {
        FormElement phi = phi_theta_route(fam, spec);
        std::vector<int> perm(spec.n_roots);
        for (int i = 0; i < spec.n_roots; ++i) perm[i] = i;
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(equal_to_truncation(phi.permuted_roots(perm), phi));
        }
    }
}

TEST_CASE("reduced twist character") {
    // ch(xi_C - 2) = e^c + e^{-c} - 2 = 2cos(2U) - 2
    RingSpec spec = RingSpec::lower(1, 2);
    FormElement lhs(spec);
    // e^{2iU} + e^{-2iU} as explicit exponential sums
    for (int sign : {+1, -1}) {
        for (int d = 0; 2 * d <= spec.dim; ++d) {
            // (sign 2 i U)^d / d!
            Scalar c = Scalar(0, CycloRational::i().pow(d))
                           .scaled(rational_pow(Rational(2 * sign), d) / factorial(d));
            FormElement t(spec);
            t.set(mono(spec, {}, d), QExpansion::constant(c));
            lhs += t;
        }
    }
    lhs -= FormElement::constant(spec, QExpansion::constant(Scalar(2L)));
    FormElement rhs = substitute_u(ycos(2, 4).scaled(Rational(2)), spec) -
                      FormElement::constant(spec, QExpansion::constant(Scalar(2L)));
    CHECK(equal_to_truncation(lhs, rhs));
}
