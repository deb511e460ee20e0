#include "thetapark/qanalogs.hpp"

#include <mutex>
#include <map>
#include <numeric>
#include <stdexcept>

#include "thetapark/word.hpp"

namespace thetapark {

QPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q-integer of negative n");
    std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(1));
    return QPoly(std::move(coeffs));
}

QPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q-Pochhammer of negative n");
    QPoly p(1);
    for (int k = 1; k <= n; ++k) p *= QPoly::one_minus_q_pow(k);
    return p;
}

QPoly q_pochhammer(const Partition& mu) {
    QPoly p(1);
    for (int part : mu.parts()) p *= q_pochhammer(part);
    return p;
}

QPoly q_multinomial(const Partition& mu) {
    QPoly numerator = q_pochhammer(mu.length());
    QPoly denominator(1);
    for (int m : mu.multiplicities()) denominator *= q_pochhammer(m);
    auto quotient = numerator.divided_exactly(denominator);
    if (!quotient) throw std::logic_error("q-multinomial division left a remainder");
    return *quotient;
}

QAnalogs q_analogs(int n, const Partition& mu) {
    return QAnalogs{q_int(n), q_pochhammer(n), q_multinomial(mu)};
}

namespace {

QRat forgotten_sum(const Partition& mu, bool first_index_zero) {
    if (mu.empty()) throw std::invalid_argument("forgotten principal evaluation of the empty partition");
    const int n = mu.size();
    const int ell = mu.length();
    QRat total;
    for_each_rearrangement(mu, [&](const Composition& alpha) {
        QRat term(1);
        int tail = n;
        for (int k = 0; k < ell; ++k) {
            if (!(first_index_zero && k == 0))
                term *= QRat(QPoly(1), QPoly::one_minus_q_pow(tail));
            tail -= alpha.part(k);
        }
        total += term;
    });
    if ((n - ell) % 2 != 0) total = -total;
    return total;
}

} // namespace

QRat forgotten_principal(const Partition& mu) {
    static std::map<Partition, QRat> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    QRat value = forgotten_sum(mu, /*first_index_zero=*/false);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(mu, std::move(value)).first->second;
}

QRat forgotten_principal_c1_zero(const Partition& mu) {
    return forgotten_sum(mu, /*first_index_zero=*/true);
}

} // namespace thetapark
