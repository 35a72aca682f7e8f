#include "transverify/qexp.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>

using namespace transverify;

namespace {

std::mt19937 rng(20240818);

Scalar rand_scalar() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> deg(-2, 2);
    return Scalar(deg(rng), CycloRational(Rational(num(rng), den(rng)),
                                          Rational(num(rng), den(rng)), Rational(0),
                                          Rational(num(rng), den(rng))));
}

QExpansion rand_qexp(long trunc = 40) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<long> expo(0, trunc - 1);
    QExpansion r(trunc);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) r.add_term(expo(rng), rand_scalar());
    return r;
}

// Unit leading coefficient, exponent possibly fractional.
QExpansion rand_unit_qexp(long trunc = 40) {
    std::uniform_int_distribution<long> val(-8, 8);
    long v = val(rng);
    std::uniform_int_distribution<int> deg(-2, 2);
    std::uniform_int_distribution<long> num(1, 9);
    Scalar lead(deg(rng), CycloRational(Rational(num(rng)), Rational(num(rng) - 5),
                                        Rational(0), Rational(0)));
    return QExpansion::monomial(v, lead) + rand_qexp(trunc).shifted(v + 1);
}

// Independent naive product oracle over plain maps.
QExpansion naive_mul(const QExpansion& a, const QExpansion& b) {
    long trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
    QExpansion r(trunc);
    for (const auto& [na, ca] : a.terms())
        for (const auto& [nb, cb] : b.terms()) r.add_term(na + nb, ca * cb);
    return r;
}

}  // namespace

TEST_CASE("q-series basics") {
    // (1 + q)(1 - q) = 1 - q^2
    QExpansion p = QExpansion::one(40) + QExpansion::monomial(8, Scalar::one(), 40);
    QExpansion m = QExpansion::one(40) - QExpansion::monomial(8, Scalar::one(), 40);
    QExpansion want = QExpansion::one(40) - QExpansion::monomial(16, Scalar::one(), 40);
    CHECK(equal_to_truncation(p * m, want));

    // q^(1/8) q^(1/8) = q^(1/4)
    QExpansion e = QExpansion::monomial(1, Scalar::one());
    CHECK((e * e).valuation() == 2);

    // anything times stored-zero is stored-zero
    CHECK((p * QExpansion::zero(40)).is_zero());
}

TEST_CASE("cauchy product agrees with the naive oracle") {
    for (int i = 0; i < 100; ++i) {
        QExpansion a = rand_qexp(), b = rand_qexp();
        CHECK(equal_to_truncation(a * b, naive_mul(a, b)));
    }
}

TEST_CASE("inversion") {
    // 1/(1 - q) = 1 + q + q^2 + ...
    QExpansion m = QExpansion::one(33) - QExpansion::monomial(8, Scalar::one(), 33);
    QExpansion inv = m.inverted();
    for (long n = 0; n < 33; n += 8) CHECK(inv.coeff(n) == Scalar::one());

    // 1/q^(1/8) = q^(-1/8)
    QExpansion e = QExpansion::monomial(1, Scalar::one());
    CHECK(e.inverted().valuation() == -1);

    // round trip on 2 q^(1/8)(1 - q)
    QExpansion s = QExpansion::monomial(1, Scalar(2L), 41) -
                   QExpansion::monomial(9, Scalar(2L), 41);
    CHECK(equal_to_truncation(s * s.inverted(), QExpansion::one()));

    // non-invertible leading coefficient is a modeling bug
    QExpansion bad = QExpansion::constant(Scalar::one() + Scalar::pi(), 40);
    CHECK_THROWS_AS(bad.inverted(), std::domain_error);
}

TEST_CASE("inversion round trip on random unit-leading series") {
    for (int i = 0; i < 100; ++i) {
        QExpansion a = rand_unit_qexp();
        QExpansion prod = a * a.inverted();
        CHECK(equal_to_truncation(prod, QExpansion::one()));
    }
}

TEST_CASE("tau shift") {
    // q^(4/8) -> zeta8^4 q^(4/8) = -q^(1/2)
    QExpansion h = QExpansion::monomial(4, Scalar::one());
    CHECK(h.tau_shift().coeff(4) == -Scalar::one());
    // integer exponent 0 fixed
    CHECK(QExpansion::one().tau_shift().coeff(0) == Scalar::one());
}

TEST_CASE("tau shift order eight and homomorphism") {
    for (int i = 0; i < 100; ++i) {
        QExpansion a = rand_qexp(), b = rand_qexp();
        QExpansion s = a;
        for (int k = 0; k < 8; ++k) s = s.tau_shift();
        CHECK(equal_to_truncation(s, a));
        CHECK(equal_to_truncation((a * b).tau_shift(), a.tau_shift() * b.tau_shift()));
        CHECK(equal_to_truncation((a + b).tau_shift(), a.tau_shift() + b.tau_shift()));
    }
}

TEST_CASE("numeric evaluation") {
    Complex i_tau(0.0, 1.0);
    CHECK(std::abs(QExpansion::one().eval(i_tau).value - Complex(1.0, 0.0)) < 1e-15);
    // q at tau = i is e^(-2 pi)
    QExpansion q = QExpansion::monomial(8, Scalar::one());
    CHECK(std::abs(q.eval(i_tau).value - Complex(0.0018674427317079888, 0.0)) < 1e-15);
    // q^(1/2) at tau = i is e^(-pi)
    QExpansion h = QExpansion::monomial(4, Scalar::one());
    CHECK(std::abs(h.eval(i_tau).value - Complex(0.04321391826377224, 0.0)) < 1e-15);
    CHECK_THROWS_AS(q.eval(Complex(0.3, -1.0)), std::domain_error);
}

TEST_CASE("evaluation is multiplicative within tail bounds") {
    Complex tau(0.25, 1.3);
    for (int i = 0; i < 100; ++i) {
        QExpansion a = rand_qexp(), b = rand_qexp();
        auto ra = a.eval(tau), rb = b.eval(tau), rab = (a * b).eval(tau);
        double bound = rab.tail + ra.tail * (std::abs(rb.value) + rb.tail) +
                       rb.tail * std::abs(ra.value) + 1e-9;
        CHECK(std::abs(rab.value - ra.value * rb.value) <= bound);
    }
}

TEST_CASE("truncation propagates pessimistically") {
    QExpansion a = rand_qexp(24);
    QExpansion b = rand_qexp(48);
    CHECK((a + b).trunc() == 24);
    if (!a.is_zero() && !b.is_zero())
        CHECK((a * b).trunc() == std::min(24 + b.valuation(), 48 + a.valuation()));
}
