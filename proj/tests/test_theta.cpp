#include "transverify/theta.hpp"

#include <catch_amalgamated.hpp>

using namespace transverify;

namespace {

// Classical series forms of the nullwerte, as independent oracles for the
// product expansions:
//   theta1(0) = 2 sum_{n>=0} q^((2n+1)^2/8)
//   theta2(0) = sum_n (-1)^n q^(n^2/2)
//   theta3(0) = sum_n q^(n^2/2)
//   theta'(0) = 2 pi sum_{n>=0} (-1)^n (2n+1) q^((2n+1)^2/8)
QExpansion series_nullwert(ThetaFamily fam, long q_order) {
    long T = kQDenom * q_order;
    QExpansion r(T);
    switch (fam) {
        case ThetaFamily::Theta1:
            for (long n = 0;; ++n) {
                long e = (2 * n + 1) * (2 * n + 1);
                if (e >= T) break;
                r.add_term(e, Scalar(2L));
            }
            return r;
        case ThetaFamily::Theta2:
        case ThetaFamily::Theta3: {
            r.add_term(0, Scalar::one());
            for (long n = 1;; ++n) {
                long e = 4 * n * n;
                if (e >= T) break;
                long c = (fam == ThetaFamily::Theta2 && n % 2 == 1) ? -2 : 2;
                r.add_term(e, Scalar(c));
            }
            return r;
        }
        default:
            return r;
    }
}

QExpansion series_prime_nullwert(long q_order) {
    long T = kQDenom * q_order;
    QExpansion r(T);
    for (long n = 0;; ++n) {
        long e = (2 * n + 1) * (2 * n + 1);
        if (e >= T) break;
        long c = (n % 2 == 0) ? (2 * n + 1) : -(2 * n + 1);
        r.add_term(e, Scalar::pi().scaled(Rational(2 * c)));
    }
    return r;
}

}  // namespace

TEST_CASE("nullwert products match the classical series") {
    const long Q = 12;
    CHECK(equal_to_truncation(theta_nullwert(ThetaFamily::Theta1, Q),
                              series_nullwert(ThetaFamily::Theta1, Q)));
    CHECK(equal_to_truncation(theta_nullwert(ThetaFamily::Theta2, Q),
                              series_nullwert(ThetaFamily::Theta2, Q)));
    CHECK(equal_to_truncation(theta_nullwert(ThetaFamily::Theta3, Q),
                              series_nullwert(ThetaFamily::Theta3, Q)));
    CHECK(equal_to_truncation(theta_prime_nullwert(Q), series_prime_nullwert(Q)));
}

TEST_CASE("two-variable expansions") {
    const long Q = 4;
    const int Y = 8;
    YSeries th = theta_expand(ThetaFamily::Theta, Y, Q);
    YSeries th1 = theta_expand(ThetaFamily::Theta1, Y, Q);
    YSeries th2 = theta_expand(ThetaFamily::Theta2, Y, Q);
    YSeries th3 = theta_expand(ThetaFamily::Theta3, Y, Q);

    SECTION("parity") {
        CHECK(th.scan_parity() == Parity::Odd);
        CHECK(th1.scan_parity() == Parity::Even);
        CHECK(th2.scan_parity() == Parity::Even);
        CHECK(th3.scan_parity() == Parity::Even);
    }
    SECTION("theta leading coefficient is 2 q^(1/8)") {
        QExpansion c = th.coeff(1);
        CHECK(c.valuation() == 1);
        CHECK(c.coeff(1) == Scalar(2L));
    }
    SECTION("nullwerte agree with the y^0 coefficients") {
        CHECK(equal_to_truncation(th1.coeff(0), theta_nullwert(ThetaFamily::Theta1, Q)));
        CHECK(equal_to_truncation(th2.coeff(0), theta_nullwert(ThetaFamily::Theta2, Q)));
        CHECK(equal_to_truncation(th3.coeff(0), theta_nullwert(ThetaFamily::Theta3, Q)));
    }
    SECTION("theta2 at y = 0 starts 1 - 2 q^(1/2)") {
        CHECK(th2.coeff(0).coeff(0) == Scalar::one());
        CHECK(th2.coeff(0).coeff(4) == Scalar(-2L));
    }
    SECTION("derivative flips parity and promotes pi-degree") {
        YSeries thp = theta_prime(th1);
        CHECK(thp.scan_parity() == Parity::Odd);
        CHECK(equal_to_truncation(theta_prime(th).coeff(0), theta_prime_nullwert(Q)));
    }
}

TEST_CASE("jacobi identity") {
    const long Q = 6;
    QExpansion lhs = theta_prime(theta_expand(ThetaFamily::Theta, 3, Q)).coeff(0);
    QExpansion rhs = (theta_nullwert(ThetaFamily::Theta1, Q) *
                      theta_nullwert(ThetaFamily::Theta2, Q) *
                      theta_nullwert(ThetaFamily::Theta3, Q))
                         .scaled(Scalar::pi());
    CHECK_FALSE(lhs.is_zero());
    CHECK(equal_to_truncation(lhs, rhs));
}

TEST_CASE("laurent division") {
    const long Q = 4;
    const int Y = 9;
    YSeries th = theta_expand(ThetaFamily::Theta, Y, Q);
    YSeries th1 = theta_expand(ThetaFamily::Theta1, Y, Q);

    SECTION("log-derivative of a simple zero has residue pi") {
        YSeries ld = y_div(theta_prime(th), th);
        CHECK(ld.valuation() == -1);
        CHECK(equal_to_truncation(ld.coeff(-1), QExpansion::constant(Scalar::pi())));
    }
    SECTION("self-division is one") {
        YSeries one = y_div(th1, th1);
        CHECK(one.valuation() == 0);
        CHECK(equal_to_truncation(one.coeff(0), QExpansion::one(one.min_q_trunc())));
        for (const auto& [d, c] : one.terms())
            if (d != 0) CHECK(c.is_zero());
    }
    SECTION("valuations subtract") {
        YSeries a = th;                  // valuation 1
        YSeries b = th.scaled(Scalar(2L));  // valuation 1
        CHECK(y_div(a, b).valuation() == 0);
    }
}

TEST_CASE("T-transformation laws as series identities") {
    const long Q = 6;
    const int Y = 7;
    YSeries th = theta_expand(ThetaFamily::Theta, Y, Q);
    YSeries th1 = theta_expand(ThetaFamily::Theta1, Y, Q);
    YSeries th2 = theta_expand(ThetaFamily::Theta2, Y, Q);
    YSeries th3 = theta_expand(ThetaFamily::Theta3, Y, Q);
    Scalar z8 = Scalar::zeta8_pow(1);

    CHECK(equal_to_truncation(th.tau_shifted(), th.scaled(z8)));
    CHECK(equal_to_truncation(th1.tau_shifted(), th1.scaled(z8)));
    CHECK(equal_to_truncation(th2.tau_shifted(), th3));
    CHECK(equal_to_truncation(th3.tau_shifted(), th2));
    // differentiated versions
    CHECK(equal_to_truncation(theta_prime(th2).tau_shifted(), theta_prime(th3)));
    CHECK(equal_to_truncation(theta_prime(th3).tau_shifted(), theta_prime(th2)));
}

TEST_CASE("per-root quotients") {
    const long Q = 3;
    const int Y = 8;
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
        YSeries f = f_quotient(fam, Y, Q);
        CHECK(f.valuation() == 0);
        CHECK(f.scan_parity() == Parity::Even);
        CHECK(equal_to_truncation(f.coeff(0), QExpansion::one(f.min_q_trunc())));
    }
    // q^0 limit of the L quotient is y cot y
    YSeries fL = f_quotient(PhiFamily::L, Y, Q);
    YSeries ycot = y_div(y_identity(Y + 2) * ycos(1, Y + 2), ysin(1, Y + 2));
    for (int d = 0; d < std::min(fL.y_trunc(), ycot.y_trunc()); ++d)
        CHECK(fL.coeff(d).coeff(0) == ycot.coeff(d).coeff(0));
}

TEST_CASE("log-derivative combinations are odd and pole-free") {
    const long Q = 3;
    for (LogDerivCombo c : {LogDerivCombo::TmL, LogDerivCombo::TmW, LogDerivCombo::TmWp,
                            LogDerivCombo::XiL, LogDerivCombo::XiW, LogDerivCombo::XiWp}) {
        YSeries s = logderiv_combo(c, 6, Q);
        CHECK(s.valuation() >= 1);
        CHECK(s.scan_parity() == Parity::Odd);
        // coefficients all carry pi-degree 1
        for (const auto& [d, q] : s.terms())
            for (const auto& [n, sc] : q.terms()) {
                auto deg = sc.uniform_pi_degree();
                CHECK(deg.has_value());
                CHECK(*deg == 1);
            }
    }
}

TEST_CASE("tilde u-factor is regular and odd") {
    const long Q = 2;
    for (PhiFamily fam : {PhiFamily::L, PhiFamily::W, PhiFamily::Wp}) {
        YSeries s = phi_tilde_u_factor(fam, 6, Q);
        CHECK(s.valuation() >= 1);
        CHECK(s.scan_parity() == Parity::Odd);
    }
}
