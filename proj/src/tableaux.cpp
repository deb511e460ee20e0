#include "thetapark/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetapark {

bool is_standard(const SYT& t) {
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (size_t r = 0; r < t.size(); ++r) {
        if (r + 1 < t.size() && t[r + 1].size() > t[r].size()) return false;
        for (size_t c = 0; c < t[r].size(); ++c) {
            int v = t[r][c];
            if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = true;
            if (c + 1 < t[r].size() && t[r][c] >= t[r][c + 1]) return false;
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] >= t[r + 1][c]) return false;
        }
    }
    return true;
}

Partition shape(const SYT& t) {
    std::vector<int> rows;
    rows.reserve(t.size());
    for (const auto& row : t) rows.push_back(static_cast<int>(row.size()));
    return Partition(std::move(rows));
}

SYT lattice_word_syt(const Word& w) {
    if (!is_lattice_word(w)) throw std::invalid_argument("not a lattice word");
    SYT t;
    for (size_t i = 0; i < w.size(); ++i) {
        size_t row = static_cast<size_t>(w[i]) - 1;
        if (row >= t.size()) t.resize(row + 1);
        t[row].push_back(static_cast<int>(i) + 1);
    }
    return t;
}

Word syt_lattice_word(const SYT& t) {
    if (!is_standard(t)) throw std::invalid_argument("not a standard tableau");
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    Word w(static_cast<size_t>(n), 0);
    for (size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) w[static_cast<size_t>(v - 1)] = static_cast<int>(r) + 1;
    return w;
}

long comaj_block(const SYT& t, const Composition& mu) {
    const Partition sh = shape(t);
    const int n = sh.size();
    if (mu.size() != n) throw std::invalid_argument("block sizes must sum to the tableau size");
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) row_of[static_cast<size_t>(v)] = static_cast<int>(r) + 1;
    // block_end[j] = mu_1 + ... + mu_i for the block i containing j
    std::vector<int> block_end(static_cast<size_t>(n) + 1, 0);
    int prefix = 0;
    for (int p : mu.parts()) {
        int start = prefix + 1;
        prefix += p;
        for (int j = start; j <= prefix; ++j) block_end[static_cast<size_t>(j)] = prefix;
    }
    long total = 0;
    for (int j = 1; j < n; ++j) {
        bool same_block = block_end[static_cast<size_t>(j)] == block_end[static_cast<size_t>(j + 1)];
        if (same_block && row_of[static_cast<size_t>(j + 1)] > row_of[static_cast<size_t>(j)])
            total += block_end[static_cast<size_t>(j)] - j;
    }
    return total;
}

void for_each_syt(const Partition& sh, const std::function<void(const SYT&)>& visit) {
    for_each_lattice_word(sh, [&](const Word& w) { visit(lattice_word_syt(w)); });
}

Int syt_count_hook(const Partition& sh) {
    const int n = sh.size();
    Int numerator = 1;
    for (int i = 2; i <= n; ++i) numerator *= i;
    Int denominator = 1;
    for (int r = 1; r <= sh.length(); ++r)
        for (int c = 1; c <= sh.part(r - 1); ++c)
            denominator *= sh.arm(r, c) + sh.leg(r, c) + 1;
    return numerator / denominator;
}

Int kostka_number(const Partition& sh, const Partition& cont) {
    if (sh.size() != cont.size()) return 0;
    // Fill cells in column-reading order within rows bottom to top, tracking
    // per-row previous value (weak increase) and the cell below (strict increase).
    const int rows = sh.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) fill[static_cast<size_t>(r)].assign(static_cast<size_t>(sh.part(r)), 0);
    std::vector<int> remaining(cont.parts().begin(), cont.parts().end());
    Int count = 0;
    auto recurse = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c >= sh.part(r)) {
            next_r = r + 1;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && c < sh.part(r - 1)) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, next_r, next_c);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    if (rows == 0) return 1;
    recurse(recurse, 0, 0);
    return count;
}

} // namespace thetapark
