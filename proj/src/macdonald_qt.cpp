#include "thetapark/macdonald_qt.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace thetapark {

QTRat SymFuncQT::coeff(const Partition& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? QTRat() : it->second;
}

void SymFuncQT::add_term(const Partition& key, const QTRat& value) {
    if (key.size() != degree_) throw std::invalid_argument("term degree mismatch");
    QTRat& slot = coeffs_[key];
    slot += value;
    if (slot.is_zero()) coeffs_.erase(key);
}

SymFuncQT basis_convert_qt(const SymFuncQT& f, Basis target, int degree_bound) {
    if (f.degree() > degree_bound) throw std::invalid_argument("degree exceeds conversion bound");
    if (f.basis() == target) return f;
    const auto& index = partition_index(f.degree());
    const size_t k = index.size();
    std::map<Partition, size_t, CanonicalPartitionLess> pos;
    for (size_t i = 0; i < k; ++i) pos.emplace(index[i], i);

    std::vector<QTRat> m_vec(k);
    if (f.basis() == Basis::m) {
        for (const auto& [key, value] : f.coeffs()) m_vec[pos.at(key)] = value;
    } else {
        const auto& to_m = basis_to_m_matrix(f.degree(), f.basis());
        for (const auto& [key, value] : f.coeffs()) {
            size_t row = pos.at(key);
            for (size_t b = 0; b < k; ++b) {
                if (to_m[row][b] == 0) continue;
                m_vec[b] += value * QTRat(QRat(Rational(to_m[row][b])));
            }
        }
    }
    SymFuncQT result(target, f.degree());
    if (target == Basis::m) {
        for (size_t b = 0; b < k; ++b)
            if (!m_vec[b].is_zero()) result.add_term(index[b], m_vec[b]);
        return result;
    }
    const auto& from_m = m_to_basis_matrix(f.degree(), target);
    for (size_t a = 0; a < k; ++a) {
        QTRat acc;
        for (size_t b = 0; b < k; ++b) {
            if (m_vec[b].is_zero() || from_m[b][a] == 0) continue;
            acc += m_vec[b] * QTRat(QRat(from_m[b][a]));
        }
        if (!acc.is_zero()) result.add_term(index[a], acc);
    }
    return result;
}

MuConstants mu_constants(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("mu_constants of the empty partition");
    MuConstants out;
    out.mu = mu;
    TPoly b, pi(1), w(1);
    for (int row = 1; row <= mu.length(); ++row) {
        for (int col = 1; col <= mu.part(row - 1); ++col) {
            b += qt_monomial(col - 1, row - 1);
            if (!(row == 1 && col == 1)) pi *= TPoly(1) - qt_monomial(col - 1, row - 1);
            int arm = mu.arm(row, col), leg = mu.leg(row, col);
            w *= (qt_monomial(arm, 0) - qt_monomial(0, leg + 1)) *
                 (qt_monomial(0, leg) - qt_monomial(arm + 1, 0));
        }
    }
    out.b = QTRat(b);
    out.pi = QTRat(pi);
    out.w = QTRat(w);
    return out;
}

SymFuncQT ht_full(const Partition& mu, int degree_bound) {
    const int n = mu.size();
    if (n > degree_bound) throw std::invalid_argument("degree exceeds the Macdonald filling bound");
    SymFuncQT f(Basis::m, n);
    if (n == 0) {
        f.add_term(Partition{}, QTRat(1));
        return f;
    }
    // cells in reading order: rows top to bottom, left to right
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int row = mu.length(); row >= 1; --row)
        for (int col = 1; col <= mu.part(row - 1); ++col) cells.push_back({row, col});
    auto cell_at = [&](int row, int col) -> int {
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].row == row && cells[i].col == col) return static_cast<int>(i);
        return -1;
    };

    for (const Partition& lambda : partitions_of(n)) {
        // fillings with content lambda: multiset permutations over the cells
        std::vector<int> word;
        for (int i = 0; i < lambda.length(); ++i)
            word.insert(word.end(), static_cast<size_t>(lambda.part(i)), i + 1);
        std::sort(word.begin(), word.end());
        TPoly total;
        do {
            auto value = [&](int row, int col) { return word[static_cast<size_t>(cell_at(row, col))]; };
            long maj = 0, inv_pairs = 0, arm_sum = 0;
            for (const Cell& c : cells) {
                if (c.row >= 2 && value(c.row, c.col) > value(c.row - 1, c.col)) {
                    maj += mu.leg(c.row, c.col) + 1;
                    arm_sum += mu.arm(c.row, c.col);
                }
            }
            for (size_t a = 0; a < cells.size(); ++a) {
                for (size_t b2 = a + 1; b2 < cells.size(); ++b2) {
                    const Cell& u = cells[a];
                    const Cell& v = cells[b2];
                    bool attack = (u.row == v.row && u.col < v.col) ||
                                  (v.row == u.row - 1 && v.col < u.col);
                    if (attack && word[static_cast<size_t>(cell_at(u.row, u.col))] >
                                      word[static_cast<size_t>(cell_at(v.row, v.col))])
                        ++inv_pairs;
                }
            }
            long inv = inv_pairs - arm_sum;
            if (inv < 0) throw std::logic_error("negative inversion statistic");
            total += qt_monomial(static_cast<int>(inv), static_cast<int>(maj));
        } while (std::next_permutation(word.begin(), word.end()));
        if (!total.is_zero()) f.add_term(lambda, QTRat(total));
    }
    return f;
}

QTRat monomial_at_cells(const Partition& gamma, const Partition& mu) {
    if (gamma.empty()) return QTRat(1);
    std::vector<std::pair<int, int>> cells;
    for (int row = 1; row <= mu.length(); ++row)
        for (int col = 1; col <= mu.part(row - 1); ++col) cells.emplace_back(col - 1, row - 1);
    if (gamma.length() > static_cast<int>(cells.size())) return QTRat();
    std::vector<int> arrangement(cells.size(), 0);
    for (int i = 0; i < gamma.length(); ++i) arrangement[static_cast<size_t>(i)] = gamma.part(i);
    std::sort(arrangement.begin(), arrangement.end());
    TPoly total;
    do {
        int q_exp = 0, t_exp = 0;
        for (size_t i = 0; i < cells.size(); ++i) {
            q_exp += arrangement[i] * cells[i].first;
            t_exp += arrangement[i] * cells[i].second;
        }
        total += qt_monomial(q_exp, t_exp);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return QTRat(total);
}

namespace {

// per-mu data reused across expansions: the modified Macdonald polynomial and
// the eigenvalue ratio M B_mu Pi_mu / w_mu
struct MuCache {
    SymFuncQT ht{Basis::m, 0};
    QTRat ratio;
};

const MuCache& mu_cache(const Partition& mu, int degree_bound) {
    static std::map<Partition, MuCache> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    MuCache entry;
    entry.ht = ht_full(mu, degree_bound);
    MuConstants consts = mu_constants(mu);
    QTRat big_m = QTRat((TPoly(1) - TPoly(QRat(QPoly::variable()))) * (TPoly(1) - TPoly::variable()));
    entry.ratio = big_m * consts.b * consts.pi / consts.w;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(mu, std::move(entry)).first->second;
}

} // namespace

SymFuncQT xi_full(const Partition& lambda, const Partition& gamma, int degree_bound) {
    const int n = lambda.size();
    if (n > degree_bound) throw std::invalid_argument("degree exceeds the Macdonald filling bound");
    SymFuncQT acc(Basis::m, n);
    for (const Partition& mu : partitions_of(n)) {
        const MuCache& cached = mu_cache(mu, degree_bound);
        QTRat pairing = cached.ht.coeff(lambda); // <h_lambda, Ht_mu>
        if (pairing.is_zero()) continue;
        QTRat scalar = cached.ratio * pairing * monomial_at_cells(gamma, mu);
        for (const auto& [key, value] : cached.ht.coeffs()) acc.add_term(key, scalar * value);
    }
    return basis_convert_qt(acc, Basis::e, degree_bound);
}

EPositivityReport epositivity_check(const Partition& lambda, const Partition& gamma, int degree_bound) {
    return epositivity_report(xi_full(lambda, gamma, degree_bound), lambda, gamma);
}

EPositivityReport epositivity_report(const SymFuncQT& expansion, const Partition& lambda,
                                     const Partition& gamma) {
    EPositivityReport report;
    report.lambda = lambda;
    report.gamma = gamma;
    for (const auto& [eta, value] : expansion.coeffs()) {
        EPositivityTerm term;
        term.eta = eta;
        std::vector<QPoly> t_coeffs = value.as_qt_polynomial();
        for (size_t t_exp = 0; t_exp < t_coeffs.size(); ++t_exp) {
            QPoly in_u = t_coeffs[t_exp].compose_one_plus_u();
            if (!in_u.nonnegative_coefficients() && report.all_nonnegative) {
                report.all_nonnegative = false;
                std::ostringstream out;
                out << "lambda=" << lambda.str() << " gamma=" << gamma.str() << " eta=" << eta.str()
                    << " t^" << t_exp << ": " << in_u.str("u");
                report.counterexample = out.str();
            }
            term.u_polys_by_t.push_back(std::move(in_u));
        }
        report.terms.push_back(std::move(term));
    }
    return report;
}

} // namespace thetapark
