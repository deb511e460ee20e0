#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "thetapark/json_io.hpp"
#include "thetapark/macdonald_t1.hpp"
#include "thetapark/qanalogs.hpp"
#include "thetapark/sym_func.hpp"
#include "thetapark/tableaux.hpp"

using namespace thetapark;

namespace {

QPoly q() { return QPoly::variable(); }

QPoly poly(std::initializer_list<int> ascending_coeffs) {
    std::vector<Rational> c;
    for (int x : ascending_coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}

} // namespace

TEST_CASE("basis conversion basics") {
    SymFunc e1(Basis::e, 1);
    e1.add_term(Partition{1}, QRat(1));
    SymFunc m1 = basis_convert(e1, Basis::m);
    CHECK(m1.coeff(Partition{1}) == QRat(1));

    // e_11 - (1-q) e_2 = m_2 + (1+q) m_11
    SymFunc f(Basis::e, 2);
    f.add_term(Partition{1, 1}, QRat(1));
    f.add_term(Partition{2}, -QRat(QPoly::one_minus_q_pow(1)));
    SymFunc in_m = basis_convert(f, Basis::m);
    CHECK(in_m.coeff(Partition{2}) == QRat(1));
    CHECK(in_m.coeff(Partition{1, 1}) == QRat(QPoly(1) + q()));

    // exact round trips through every basis
    for (Basis b : {Basis::m, Basis::h, Basis::s, Basis::e})
        CHECK(basis_convert(basis_convert(f, b), Basis::e) == f);

    CHECK_THROWS_AS(basis_convert(SymFunc(Basis::e, 9), Basis::m), std::invalid_argument);
}

TEST_CASE("schur expansions against tableau counts") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            SymFunc s(Basis::s, n);
            s.add_term(lambda, QRat(1));
            SymFunc in_m = basis_convert(s, Basis::m);
            for (const Partition& rho : partitions_of(n))
                CHECK(in_m.coeff(rho) == QRat(Rational(kostka_number(lambda, rho))));
            // dual route: s_lambda in the e basis equals s_{lambda'} in the h basis
            SymFunc in_e = basis_convert(s, Basis::e);
            SymFunc s_conj(Basis::s, n);
            s_conj.add_term(lambda.conjugate(), QRat(1));
            SymFunc in_h = basis_convert(s_conj, Basis::h);
            for (const Partition& rho : partitions_of(n)) {
                CHECK(in_e.coeff(rho) == in_h.coeff(rho));
                QRat c = in_e.coeff(rho);
                CHECK(c.is_polynomial());
            }
        }
    }
}

TEST_CASE("macdonald polynomial at t=1") {
    SymFunc ht1 = macdonald_t1(Partition{1});
    CHECK(ht1.coeff(Partition{1}) == QRat(1));

    SymFunc ht2 = macdonald_t1(Partition{2});
    CHECK(ht2.coeff(Partition{1, 1}) == QRat(1));
    CHECK(ht2.coeff(Partition{2}) == -QRat(QPoly::one_minus_q_pow(1)));

    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            SymFunc direct = basis_convert(macdonald_t1(mu), Basis::m);
            SymFunc oracle = macdonald_t1_monomial_oracle(mu);
            CHECK(direct == oracle);
            // positivity of the monomial coefficients at t=1
            for (const auto& [key, value] : direct.coeffs()) {
                QPoly p = value.as_polynomial();
                CHECK(p.integer_coefficients());
                CHECK(p.nonnegative_coefficients());
            }
        }
    }
}

TEST_CASE("hall pairings at t=1") {
    CHECK(pair_h_t1(Composition{4}, Partition{4}) == QPoly(1));
    CHECK(pair_s_t1(Composition{2, 1}, Partition{3}) == QPoly(1));

    // at q=1: |WV(lambda,mu)| and the number of standard tableaux
    Partition lambda{2, 1};
    size_t wv_count = collect_wv(lambda.parts(), Composition{1, 2}).size();
    CHECK(pair_h_t1(Composition{1, 2}, lambda).at_one() == Rational(wv_count));
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(pair_s_t1(Composition(std::vector<int>(static_cast<size_t>(n), 1)), lam).at_one() ==
                  Rational(syt_count_hook(lam)));

    // multiplicativity: permuting the parts of mu leaves the pairing unchanged
    CHECK(pair_h_t1(Composition{1, 2}, lambda) == pair_h_t1(Composition{2, 1}, lambda));
    CHECK(pair_s_t1(Composition{1, 2}, lambda) == pair_s_t1(Composition{2, 1}, lambda));

    // the tableau route and the lattice-word route agree
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Composition& beta : compositions_of(n))
                CHECK(pair_s_t1(beta, lam) == pair_s_t1_lattice(beta, lam));

    CHECK_THROWS_AS(pair_h_t1(Composition{2}, Partition{3}), std::invalid_argument);

    // RSK mass check: sum over lambda of f^lambda * K(lambda, 1^n)(1) = n!
    for (int n = 1; n <= 5; ++n) {
        Rational mass = 0;
        Composition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lam : partitions_of(n))
            mass += Rational(syt_count_hook(lam)) * pair_s_t1(ones, lam).at_one();
        Rational factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(mass == factorial);
    }
}

TEST_CASE("monomial principal specialization") {
    CHECK(monomial_principal(Partition{1}, Composition{2}) == poly({1, 1}));
    CHECK(monomial_principal(Partition{}, Composition{3, 1}) == QPoly(1));
    CHECK(monomial_principal(Partition{2, 1}, Composition{1}) == QPoly());

    for (int n = 1; n <= 5; ++n)
        for (const Composition& beta : compositions_of(n))
            for (int m = 0; m <= 3; ++m)
                for (const Partition& gamma : partitions_of(m))
                    CHECK(monomial_principal(gamma, beta) == monomial_principal_plethystic(gamma, beta));
}

TEST_CASE("xi expansion oracle") {
    // Xi e_n = e_n
    for (int n = 1; n <= 6; ++n) {
        EExpansion ex = xi_expand_t1('e', Partition{n}, Partition{});
        REQUIRE(ex.terms().size() == 1);
        CHECK(ex.term(Partition{n}) == QPoly(1));
    }

    EExpansion ex1 = xi_expand_t1('e', Partition{1, 1}, Partition{2});
    CHECK(ex1.term(Partition{2}) == poly({1, 1, 1, 1}));
    CHECK(ex1.term(Partition{1, 1}) == poly({3, 2, 1}));

    EExpansion ex2 = xi_expand_t1('s', Partition{2, 1}, Partition{1});
    CHECK(ex2.term(Partition{1, 1, 1}) == poly({2, 1}));
    CHECK(ex2.term(Partition{2, 1}) == poly({4, 6, 4, 1}));
    CHECK(ex2.term(Partition{3}) == poly({0, 1, 2, 2, 1}));

    // s_{1^k} = e_k
    for (int k = 1; k <= 5; ++k) {
        Partition column(std::vector<int>(static_cast<size_t>(k), 1));
        for (const Partition& gamma : {Partition{}, Partition{1}, Partition{2}})
            CHECK(xi_expand_t1('s', column, gamma) == xi_expand_t1('e', Partition{k}, gamma));
    }
}

TEST_CASE("expansion rendering") {
    EExpansion ex = xi_expand_t1('e', Partition{1, 1}, Partition{2});
    CHECK(ex.str() == "(q^3 + q^2 + q + 1)e₂ + (q^2 + 2*q + 3)e₁₁");
}

TEST_CASE("expansion coefficients stay positive under q -> 1+u") {
    for (const auto& [kind, lambda, gamma] :
         {std::tuple<char, Partition, Partition>{'e', Partition{1, 1}, Partition{2}},
          std::tuple<char, Partition, Partition>{'s', Partition{2, 1}, Partition{1}}}) {
        for (const auto& [eta, poly] : xi_expand_t1(kind, lambda, gamma).terms())
            CHECK(poly.compose_one_plus_u().nonnegative_coefficients());
    }
}

TEST_CASE("json round trips") {
    EExpansion ex = xi_expand_t1('s', Partition{2, 1}, Partition{1});
    CHECK(expansion_from_json(expansion_to_json(ex)) == ex);
    QPoly p = poly({4, 6, 4, 1});
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(QPoly()).empty());
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS(parse_partition("1,3"));
}
