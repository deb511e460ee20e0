#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "thetapark/macdonald_qt.hpp"
#include "thetapark/macdonald_t1.hpp"
#include "thetapark/qanalogs.hpp"

using namespace thetapark;

namespace {

QTRat qt(int q_exp, int t_exp) { return QTRat(qt_monomial(q_exp, t_exp)); }

// bivariate coefficient map of a polynomial value, for symmetry checks
std::map<std::pair<int, int>, Rational> bivariate(const QTRat& value) {
    std::map<std::pair<int, int>, Rational> out;
    std::vector<QPoly> rows = value.as_qt_polynomial();
    for (int t_exp = 0; t_exp < static_cast<int>(rows.size()); ++t_exp)
        for (int q_exp = 0; q_exp <= rows[static_cast<size_t>(t_exp)].degree(); ++q_exp) {
            Rational c = rows[static_cast<size_t>(t_exp)].coeff(q_exp);
            if (c != 0) out[{q_exp, t_exp}] = c;
        }
    return out;
}

std::map<std::pair<int, int>, Rational> swapped(std::map<std::pair<int, int>, Rational> m) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [key, value] : m) out[{key.second, key.first}] = value;
    return out;
}

} // namespace

TEST_CASE("t-polynomials and qt fractions") {
    TPoly p = TPoly(1) + TPoly::variable();
    CHECK(p.degree() == 1);
    CHECK((p - p).is_zero());
    QTRat frac(TPoly(1), p);
    CHECK_FALSE(frac.is_polynomial());
    QTRat prod = frac * QTRat(p);
    CHECK(prod == QTRat(1));
    // gcd reduction in t
    TPoly one_minus_t2 = TPoly(1) - TPoly::monomial(2);
    TPoly one_minus_t = TPoly(1) - TPoly::variable();
    QTRat reduced(one_minus_t2, one_minus_t);
    CHECK(reduced.is_polynomial());
    CHECK(reduced == QTRat(TPoly(1) + TPoly::variable()));
}

TEST_CASE("small modified Macdonald polynomials") {
    SymFuncQT h1 = ht_full(Partition{1});
    CHECK(h1.coeff(Partition{1}) == QTRat(1));

    SymFuncQT h2 = ht_full(Partition{2});
    CHECK(h2.coeff(Partition{2}) == QTRat(1));
    CHECK(h2.coeff(Partition{1, 1}) == QTRat(1) + qt(1, 0));

    SymFuncQT h11 = ht_full(Partition{1, 1});
    CHECK(h11.coeff(Partition{2}) == QTRat(1));
    CHECK(h11.coeff(Partition{1, 1}) == QTRat(1) + qt(0, 1));

    SymFuncQT h21 = ht_full(Partition{2, 1});
    CHECK(h21.coeff(Partition{3}) == QTRat(1));
    CHECK(h21.coeff(Partition{2, 1}) == QTRat(1) + qt(1, 0) + qt(0, 1));
    CHECK(h21.coeff(Partition{1, 1, 1}) ==
          QTRat(1) + QTRat(2) * qt(1, 0) + QTRat(2) * qt(0, 1) + qt(1, 1));
}

TEST_CASE("specialization at t=1 and conjugation symmetry") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            SymFuncQT full = ht_full(mu);
            SymFunc t1 = basis_convert(macdonald_t1(mu), Basis::m);
            for (const Partition& lambda : partitions_of(n)) {
                CHECK(full.coeff(lambda).eval_t(QRat(1)) == t1.coeff(lambda));
                // the pairing via word vectors
                CHECK(full.coeff(lambda).eval_t(QRat(1)) == QRat(pair_h_t1(Composition(mu.parts()), lambda)));
            }
            // Ht_mu(q,t) = Ht_{mu'}(t,q)
            SymFuncQT conj = ht_full(mu.conjugate());
            for (const Partition& lambda : partitions_of(n))
                CHECK(bivariate(full.coeff(lambda)) == swapped(bivariate(conj.coeff(lambda))));
        }
    }
}

TEST_CASE("filling mass at q=t=1") {
    // every monomial coefficient of Ht_mu at q=t=1 is the multinomial count
    // of words of that content, independently of mu
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            SymFuncQT full = ht_full(mu);
            for (const Partition& lambda : partitions_of(n)) {
                Rational expected = 1;
                int placed = 0;
                for (int part : lambda.parts())
                    for (int i = 1; i <= part; ++i) expected = expected * (++placed) / i;
                CHECK(full.coeff(lambda).eval_t(QRat(1)).eval(1) == expected);
            }
        }
    }
}

TEST_CASE("cell constants") {
    MuConstants c1 = mu_constants(Partition{1});
    CHECK(c1.b == QTRat(1));
    CHECK(c1.pi == QTRat(1));
    CHECK(c1.w == QTRat((TPoly(1) - TPoly(QRat(QPoly::variable()))) * (TPoly(1) - TPoly::variable())));

    // B_mu at q=t=1 counts the cells
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            MuConstants c = mu_constants(mu);
            CHECK(c.b.eval_t(QRat(1)).eval(1) == n);
            // the t=1 limit of M B Pi / w
            QTRat big_m = QTRat((TPoly(1) - TPoly(QRat(QPoly::variable()))) * (TPoly(1) - TPoly::variable()));
            QRat limit = (big_m * c.b * c.pi / c.w).eval_t(QRat(1));
            QRat expected;
            for_each_rearrangement(mu, [&](const Composition& alpha) {
                expected += QRat(QPoly::one_minus_q_pow(alpha.part(0)));
            });
            expected /= QRat(q_pochhammer(mu));
            if ((n - mu.length()) % 2 != 0) expected = -expected;
            CHECK(limit == expected);
        }
    }
}

TEST_CASE("xi at generic q,t") {
    // Xi e_n = e_n
    for (int n = 1; n <= 4; ++n) {
        SymFuncQT ex = xi_full(Partition{n}, Partition{});
        REQUIRE(ex.coeffs().size() == 1);
        CHECK(ex.coeff(Partition{n}) == QTRat(1));
    }

    // coefficients clear to polynomials and match the t=1 pipeline
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= 1; ++m) {
                for (const Partition& gamma : partitions_of(m)) {
                    SymFuncQT full = xi_full(lambda, gamma);
                    EExpansion t1 = xi_expand_t1('e', lambda, gamma);
                    for (const Partition& eta : partitions_of(n)) {
                        QTRat value = full.coeff(eta);
                        CHECK(value.is_polynomial());
                        CHECK(value.eval_t(QRat(1)) == QRat(t1.term(eta)));
                    }
                }
            }
        }
    }
}

TEST_CASE("e-positivity after q -> 1+u") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= 1; ++m)
                for (const Partition& gamma : partitions_of(m)) {
                    EPositivityReport report = epositivity_check(lambda, gamma);
                    CHECK(report.all_nonnegative);
                    CHECK(report.counterexample.empty());
                }
}
