#include "thetapark/macdonald_t1.hpp"

#include <map>
#include <stdexcept>

#include "thetapark/qanalogs.hpp"
#include "thetapark/tableaux.hpp"

namespace thetapark {

namespace {

Composition as_composition(const Partition& mu) { return Composition(mu.parts()); }

long u_statistic(const Word& l) {
    const int len = static_cast<int>(l.size());
    long total = 0;
    for (int j = 1; j <= len; ++j) total += static_cast<long>(l[static_cast<size_t>(j - 1)]) * (len - j);
    return total;
}

long revmaj_vector(const WordVector& wv) {
    long total = 0;
    for (const Word& seg : wv) total += revmaj(seg);
    return total;
}

// sum over PR(eta, beta) of products of forgotten principal evaluations,
// grouped by eta
std::map<Partition, QRat, CanonicalPartitionLess> forgotten_products_by_eta(const Composition& beta) {
    std::map<Partition, QRat, CanonicalPartitionLess> by_eta;
    WordVector nu;
    QRat product(1);
    std::vector<int> all_parts;
    auto recurse = [&](auto&& self, int block, const QRat& acc) -> void {
        if (block == beta.length()) {
            std::vector<int> sorted = all_parts;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            by_eta[Partition(sorted)] += acc;
            return;
        }
        for (const Partition& part : partitions_of(beta.part(block))) {
            for (int p : part.parts()) all_parts.push_back(p);
            self(self, block + 1, acc * forgotten_principal(part));
            all_parts.resize(all_parts.size() - static_cast<size_t>(part.length()));
        }
    };
    recurse(recurse, 0, product);
    return by_eta;
}

} // namespace

SymFunc macdonald_t1(const Partition& mu) {
    const int n = mu.size();
    SymFunc f(Basis::e, n);
    QRat poch{q_pochhammer(mu)};
    for (const auto& [eta, sum] : forgotten_products_by_eta(as_composition(mu))) {
        QRat coeff = poch * sum;
        if (!coeff.is_zero()) f.add_term(eta, coeff);
    }
    return f;
}

SymFunc macdonald_t1_monomial_oracle(const Partition& mu) {
    const int n = mu.size();
    SymFunc f(Basis::m, n);
    for (const Partition& lambda : partitions_of(n)) {
        QPoly coeff = pair_h_t1(as_composition(mu), lambda);
        if (!coeff.is_zero()) f.add_term(lambda, QRat(coeff));
    }
    return f;
}

QPoly pair_h_t1(const Composition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("pair_h_t1 size mismatch");
    QPoly total;
    for_each_wv(lambda.parts(), mu, [&](const WordVector& wv) {
        total += QPoly::monomial(static_cast<int>(revmaj_vector(wv)));
    });
    return total;
}

QPoly pair_s_t1(const Composition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("pair_s_t1 size mismatch");
    QPoly total;
    for_each_syt(lambda, [&](const SYT& t) {
        total += QPoly::monomial(static_cast<int>(comaj_block(t, mu)));
    });
    return total;
}

QPoly pair_s_t1_lattice(const Composition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("pair_s_t1 size mismatch");
    QPoly total;
    for_each_lw(lambda, mu, [&](const WordVector& wv) {
        total += QPoly::monomial(static_cast<int>(revmaj_vector(wv)));
    });
    return total;
}

QPoly monomial_principal(const Partition& gamma, const Composition& beta) {
    QPoly total;
    for_each_wv(gamma.multiplicities(), beta, [&](const WordVector& lv) {
        long u = 0;
        for (const Word& seg : lv) u += u_statistic(seg);
        total += QPoly::monomial(static_cast<int>(u));
    });
    return total;
}

QPoly monomial_principal_plethystic(const Partition& gamma, const Composition& beta) {
    // alphabet of q-powers: [beta_i]_q contributes q^0 .. q^{beta_i - 1}
    std::vector<int> exponents;
    for (int b : beta.parts())
        for (int j = 0; j < b; ++j) exponents.push_back(j);
    if (gamma.empty()) return QPoly(1);
    if (gamma.length() > static_cast<int>(exponents.size())) return QPoly();
    std::vector<int> arrangement(exponents.size(), 0);
    for (int i = 0; i < gamma.length(); ++i) arrangement[static_cast<size_t>(i)] = gamma.part(i);
    std::sort(arrangement.begin(), arrangement.end());
    QPoly total;
    do {
        long expo = 0;
        for (size_t i = 0; i < arrangement.size(); ++i)
            expo += static_cast<long>(arrangement[i]) * exponents[i];
        total += QPoly::monomial(static_cast<int>(expo));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return total;
}

EExpansion xi_expand_t1(char kind, const Partition& lambda, const Partition& gamma) {
    if (kind != 'e' && kind != 's') throw std::invalid_argument("kind must be 'e' or 's'");
    const int n = lambda.size();
    const Partition word_content = kind == 'e' ? lambda : lambda.conjugate();

    std::map<Partition, QRat, CanonicalPartitionLess> coefficients;
    for (const Composition& beta : compositions_of(n)) {
        QPoly word_gf;
        auto add_word = [&](const WordVector& wv) {
            word_gf += QPoly::monomial(static_cast<int>(revmaj_vector(wv)));
        };
        if (kind == 'e')
            for_each_wv(word_content.parts(), beta, add_word);
        else
            for_each_lw(word_content, beta, add_word);
        if (word_gf.is_zero()) continue;

        QPoly front = word_gf * monomial_principal(gamma, beta) * QPoly::one_minus_q_pow(beta.part(0));
        if (front.is_zero()) continue;
        if ((n - beta.length()) % 2 != 0) front = -front;

        for (const auto& [eta, sum] : forgotten_products_by_eta(beta))
            coefficients[eta] += QRat(front) * sum;
    }

    EExpansion result(n);
    for (const auto& [eta, value] : coefficients) {
        if (value.is_zero()) continue;
        QPoly poly = value.as_polynomial(); // theorem guarantee; failure is a bug
        if (!poly.integer_coefficients() || !poly.nonnegative_coefficients())
            throw std::logic_error("expansion coefficient is not in N[q]");
        result.add_term(eta, poly);
    }
    return result;
}

} // namespace thetapark
