#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "thetapark/qanalogs.hpp"
#include "thetapark/qpoly.hpp"
#include "thetapark/qrat.hpp"

using namespace thetapark;

namespace {

QPoly q() { return QPoly::variable(); }

QRat random_fraction(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_poly = [&](bool nonzero) {
        QPoly p;
        int d = deg(rng);
        for (int e = 0; e <= d; ++e) p += QPoly::monomial(e, coeff(rng));
        if (nonzero && p.is_zero()) p = QPoly(1) + QPoly::monomial(1);
        return p;
    };
    return QRat(random_poly(false), random_poly(true));
}

} // namespace

TEST_CASE("polynomial arithmetic and canonical form") {
    QPoly p = QPoly(1) + q() + q() * q();
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.str() == "q^2 + q + 1");
    CHECK((QPoly(2) * q()).str() == "2*q");
    CHECK((-(q() * q())).str() == "-q^2");

    QPoly prod = QPoly::one_minus_q_pow(2);
    auto quot = prod.divided_exactly(QPoly::one_minus_q_pow(1));
    REQUIRE(quot.has_value());
    CHECK(*quot == QPoly(1) + q());
    CHECK_FALSE(QPoly(1).divided_exactly(QPoly::one_minus_q_pow(1)).has_value());
}

TEST_CASE("q analogs") {
    CHECK(q_int(3) == QPoly(1) + q() + q() * q());
    CHECK(q_int(0).is_zero());
    CHECK(q_pochhammer(0) == QPoly(1));
    CHECK(q_pochhammer(2) == QPoly::one_minus_q_pow(1) * QPoly::one_minus_q_pow(2));
    CHECK_THROWS_AS(q_int(-1), std::invalid_argument);

    // multinomial [3; 2,1]_q specializes to 3 at q = 1
    QPoly multi = q_multinomial(Partition{2, 2, 1});
    CHECK(multi.at_one() == 3);
    // q-multinomials are ordinary multinomials at q = 1 for |mu| <= 7
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            Rational expected = 1;
            int placed = 0;
            for (int m : mu.multiplicities()) {
                for (int i = 1; i <= m; ++i) {
                    ++placed;
                    expected = expected * placed / i;
                }
            }
            CHECK(q_multinomial(mu).at_one() == expected);
        }
    }
}

TEST_CASE("substitution q -> 1 + u") {
    QPoly sq = q() * q();
    CHECK(sq.compose_one_plus_u() == QPoly(1) + QPoly::monomial(1, 2) + QPoly::monomial(2));
    QPoly p = q() * q() * q() + q() * q() + q() + QPoly(1);
    CHECK(p.eval(1) == 4);
    // nonnegative q-coefficients stay nonnegative after q -> 1+u
    CHECK(p.compose_one_plus_u().nonnegative_coefficients());
}

TEST_CASE("rational function canonical form") {
    QRat r(QPoly::one_minus_q_pow(2), QPoly::one_minus_q_pow(1));
    CHECK(r.is_polynomial());
    CHECK(r.as_polynomial() == QPoly(1) + q());

    QRat geom(QPoly(1), QPoly::one_minus_q_pow(1));
    CHECK_FALSE(geom.is_polynomial());
    CHECK_THROWS_AS(geom.as_polynomial(), NonPolynomialError);
    auto series = geom.series(5);
    for (const Rational& c : series) CHECK(c == 1);

    CHECK(QRat(QPoly(1), q()) == QRat(QPoly(2), QPoly(2) * q()));
    CHECK_THROWS_AS(QRat(QPoly(1), QPoly()), std::invalid_argument);
}

TEST_CASE("randomized field identities") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        QRat a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QRat());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("forgotten principal evaluation") {
    // f_(1)[1/(1-q)] = 1/(1-q)
    CHECK(forgotten_principal(Partition{1}) == QRat(QPoly(1), QPoly::one_minus_q_pow(1)));

    // f_(2,1)[1/(1-q)] = -(1/((1-q^3)(1-q)) + 1/((1-q^3)(1-q^2)))
    QRat expected = QRat(QPoly(1), QPoly::one_minus_q_pow(3) * QPoly::one_minus_q_pow(1)) +
                    QRat(QPoly(1), QPoly::one_minus_q_pow(3) * QPoly::one_minus_q_pow(2));
    CHECK(forgotten_principal(Partition{2, 1}) == -expected);

    // (1 - q^{|mu|}) * bC_mu = bbarC_mu as exact rational functions
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            QRat bc = forgotten_principal(mu);
            QRat bc_bar = forgotten_principal_c1_zero(mu);
            CHECK(QRat(QPoly::one_minus_q_pow(n)) * bc == bc_bar);
        }
    }
}
