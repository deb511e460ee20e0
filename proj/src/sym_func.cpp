#include "thetapark/sym_func.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "thetapark/tableaux.hpp"

namespace thetapark {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::s: return "s";
    }
    return "?";
}

QRat SymFunc::coeff(const Partition& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? QRat() : it->second;
}

void SymFunc::add_term(const Partition& key, const QRat& value) {
    if (key.size() != degree_) throw std::invalid_argument("term degree mismatch");
    QRat& slot = coeffs_[key];
    slot += value;
    if (slot.is_zero()) coeffs_.erase(key);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("cannot add symmetric functions across bases or degrees");
    for (const auto& [key, value] : other.coeffs_) add_term(key, value);
    return *this;
}

SymFunc& SymFunc::scale(const QRat& factor) {
    if (factor.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, value] : coeffs_) value *= factor;
    return *this;
}

namespace {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Number of 0/1 (or unrestricted nonnegative) integer matrices with the given
// row and column sums; rows are filled one at a time.
Int matrix_count(const std::vector<int>& row_sums, const std::vector<int>& col_sums, bool zero_one) {
    std::vector<int> remaining = col_sums;
    Int count = 0;
    auto fill_row = [&](auto&& self, size_t row, size_t col, int left) -> void {
        if (col == remaining.size()) {
            if (left != 0) return;
            if (row + 1 == row_sums.size()) {
                ++count;
                return;
            }
            self(self, row + 1, 0, row_sums[row + 1]);
            return;
        }
        int cap = zero_one ? std::min(1, remaining[col]) : remaining[col];
        cap = std::min(cap, left);
        for (int v = 0; v <= cap; ++v) {
            remaining[col] -= v;
            self(self, row, col + 1, left - v);
            remaining[col] += v;
        }
    };
    if (row_sums.empty()) return col_sums.empty() || std::all_of(col_sums.begin(), col_sums.end(), [](int c) { return c == 0; }) ? 1 : 0;
    fill_row(fill_row, 0, 0, row_sums[0]);
    return count;
}

struct DegreeTables {
    std::vector<Partition> index;                  // canonical order
    std::map<Partition, size_t, CanonicalPartitionLess> pos;
    IntMatrix e_to_m, h_to_m, s_to_m;              // rows: basis index, cols: m index
    RatMatrix m_to_e, m_to_h, m_to_s;
};

RatMatrix invert(const IntMatrix& a) {
    const size_t n = a.size();
    RatMatrix work(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) work[i][j] = Rational(a[i][j]);
        work[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("transition matrix is singular");
        std::swap(work[pivot], work[col]);
        Rational lead = work[col][col];
        for (size_t j = 0; j < 2 * n; ++j) work[col][j] /= lead;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col] == 0) continue;
            Rational factor = work[i][col];
            for (size_t j = 0; j < 2 * n; ++j) work[i][j] -= factor * work[col][j];
        }
    }
    RatMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

const DegreeTables& tables_for(int n) {
    static std::map<int, DegreeTables> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.index = partitions_of(n);
    for (size_t i = 0; i < t.index.size(); ++i) t.pos.emplace(t.index[i], i);
    const size_t k = t.index.size();
    t.e_to_m.assign(k, std::vector<Int>(k, 0));
    t.h_to_m.assign(k, std::vector<Int>(k, 0));
    t.s_to_m.assign(k, std::vector<Int>(k, 0));
    for (size_t a = 0; a < k; ++a) {
        for (size_t b = 0; b < k; ++b) {
            t.e_to_m[a][b] = matrix_count(t.index[a].parts(), t.index[b].parts(), true);
            t.h_to_m[a][b] = matrix_count(t.index[a].parts(), t.index[b].parts(), false);
        }
    }
    // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded over
    // permutations; each surviving term contributes a signed h-product row.
    for (size_t a = 0; a < k; ++a) {
        const Partition& lambda = t.index[a];
        const int ell = lambda.length();
        std::vector<int> perm(static_cast<size_t>(ell));
        for (int i = 0; i < ell; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            int sign = 1;
            for (int i = 0; i < ell; ++i)
                for (int j = i + 1; j < ell; ++j)
                    if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
            std::vector<int> idx;
            bool valid = true;
            for (int i = 0; i < ell && valid; ++i) {
                int h = lambda.part(i) - i + perm[static_cast<size_t>(i)];
                if (h < 0) valid = false;
                else if (h > 0) idx.push_back(h);
            }
            if (!valid) continue;
            std::sort(idx.begin(), idx.end(), std::greater<int>());
            size_t row = t.pos.at(Partition(idx));
            for (size_t b = 0; b < k; ++b) t.s_to_m[a][b] += sign * t.h_to_m[row][b];
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (ell == 0) t.s_to_m[a][t.pos.at(Partition())] = 1;
    }
    t.m_to_e = invert(t.e_to_m);
    t.m_to_h = invert(t.h_to_m);
    t.m_to_s = invert(t.s_to_m);
    return cache.emplace(n, std::move(t)).first->second;
}

const IntMatrix& to_m_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::e: return t.e_to_m;
        case Basis::h: return t.h_to_m;
        case Basis::s: return t.s_to_m;
        default: throw std::logic_error("no to-m matrix for the monomial basis");
    }
}

const RatMatrix& from_m_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::e: return t.m_to_e;
        case Basis::h: return t.m_to_h;
        case Basis::s: return t.m_to_s;
        default: throw std::logic_error("no from-m matrix for the monomial basis");
    }
}

} // namespace

const std::vector<Partition>& partition_index(int n) { return tables_for(n).index; }

const std::vector<std::vector<Int>>& basis_to_m_matrix(int n, Basis source) {
    return to_m_matrix(tables_for(n), source);
}

const std::vector<std::vector<Rational>>& m_to_basis_matrix(int n, Basis target) {
    return from_m_matrix(tables_for(n), target);
}

SymFunc basis_convert(const SymFunc& f, Basis target, int degree_bound) {
    if (f.degree() > degree_bound) throw std::invalid_argument("degree exceeds conversion bound");
    if (f.basis() == target) return f;
    const DegreeTables& t = tables_for(f.degree());
    const size_t k = t.index.size();

    // source -> m
    std::vector<QRat> m_vec(k);
    if (f.basis() == Basis::m) {
        for (const auto& [key, value] : f.coeffs()) m_vec[t.pos.at(key)] = value;
    } else {
        const IntMatrix& to_m = to_m_matrix(t, f.basis());
        for (const auto& [key, value] : f.coeffs()) {
            size_t row = t.pos.at(key);
            for (size_t b = 0; b < k; ++b) {
                if (to_m[row][b] == 0) continue;
                m_vec[b] += value * QRat(Rational(to_m[row][b]));
            }
        }
    }

    SymFunc result(target, f.degree());
    if (target == Basis::m) {
        for (size_t b = 0; b < k; ++b)
            if (!m_vec[b].is_zero()) result.add_term(t.index[b], m_vec[b]);
        return result;
    }
    const RatMatrix& from_m = from_m_matrix(t, target);
    // coefficient on target index a solves sum_a coeff_a * to_m[a][b] = m_vec[b]
    for (size_t a = 0; a < k; ++a) {
        QRat acc;
        for (size_t b = 0; b < k; ++b) {
            if (m_vec[b].is_zero() || from_m[b][a] == 0) continue;
            acc += m_vec[b] * QRat(from_m[b][a]);
        }
        if (!acc.is_zero()) result.add_term(t.index[a], acc);
    }
    return result;
}

void EExpansion::add_term(const Partition& eta, const QPoly& poly) {
    if (eta.size() != degree_) throw std::invalid_argument("term degree mismatch");
    if (poly.is_zero()) return;
    QPoly& slot = terms_[eta];
    slot += poly;
    if (slot.is_zero()) terms_.erase(eta);
}

QPoly EExpansion::term(const Partition& eta) const {
    auto it = terms_.find(eta);
    return it == terms_.end() ? QPoly() : it->second;
}

namespace {
std::string subscript_digits(int value) {
    static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                     "₅", "₆", "₇", "₈", "₉"};
    std::string s = std::to_string(value), out;
    for (char c : s) out += digits[c - '0'];
    return out;
}
} // namespace

std::string EExpansion::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [eta, poly] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool parenthesize = poly.degree() > 0 || poly.coeff(0) != 1;
        if (parenthesize) out << '(' << poly.str() << ')';
        out << "e";
        bool small_parts = true;
        for (int p : eta.parts()) small_parts = small_parts && p <= 9;
        if (small_parts && !eta.empty()) {
            for (int p : eta.parts()) out << subscript_digits(p);
        } else {
            out << eta.str();
        }
    }
    return out.str();
}

} // namespace thetapark
