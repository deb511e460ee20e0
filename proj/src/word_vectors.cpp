#include "thetapark/word_vectors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thetapark {

namespace {

WordVector split_by(const Word& w, const Composition& beta) {
    WordVector wv;
    wv.reserve(static_cast<size_t>(beta.length()));
    size_t pos = 0;
    for (int len : beta.parts()) {
        wv.emplace_back(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + len);
        pos += static_cast<size_t>(len);
    }
    return wv;
}

// Multiset of parts of alpha distributed over blocks of sizes beta; each block
// receives a multiset summing to beta_i, emitted in every distinct order
// (CR) or weakly decreasing only (PR).
void blocks_recurse(std::vector<int>& avail, const Composition& beta, size_t block, bool partitions_only,
                    WordVector& acc, const std::function<void(const WordVector&)>& visit) {
    if (block == static_cast<size_t>(beta.length())) {
        bool used_all = std::all_of(avail.begin(), avail.end(), [](int m) { return m == 0; });
        if (used_all) visit(acc);
        return;
    }
    const int target = beta.part(static_cast<int>(block));
    Word current;
    auto fill = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            acc.push_back(current);
            blocks_recurse(avail, beta, block + 1, partitions_only, acc, visit);
            acc.pop_back();
            return;
        }
        const int cap = partitions_only ? std::min(remaining, max_part) : remaining;
        for (int p = cap; p >= 1; --p) {
            if (p > static_cast<int>(avail.size()) || avail[static_cast<size_t>(p - 1)] == 0) continue;
            --avail[static_cast<size_t>(p - 1)];
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
            ++avail[static_cast<size_t>(p - 1)];
        }
    };
    fill(fill, target, target);
}

} // namespace

void for_each_wv(const std::vector<int>& letter_mults, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit) {
    const int total = beta.size();
    int letters = std::accumulate(letter_mults.begin(), letter_mults.end(), 0);
    if (letters > total) return; // unsatisfiable
    Word w;
    w.reserve(static_cast<size_t>(total));
    w.assign(static_cast<size_t>(total - letters), 0);
    for (size_t i = 0; i < letter_mults.size(); ++i)
        w.insert(w.end(), static_cast<size_t>(letter_mults[i]), static_cast<int>(i) + 1);
    if (w.empty()) {
        if (total == 0) visit(split_by(w, beta));
        return;
    }
    do {
        visit(split_by(w, beta));
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_cr(const Partition& alpha, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit) {
    if (alpha.size() != beta.size()) return;
    std::vector<int> avail(alpha.empty() ? 0 : static_cast<size_t>(alpha.part(0)), 0);
    for (int p : alpha.parts()) ++avail[static_cast<size_t>(p - 1)];
    WordVector acc;
    blocks_recurse(avail, beta, 0, /*partitions_only=*/false, acc, visit);
}

void for_each_pr(const Partition& alpha, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit) {
    if (alpha.size() != beta.size()) return;
    std::vector<int> avail(alpha.empty() ? 0 : static_cast<size_t>(alpha.part(0)), 0);
    for (int p : alpha.parts()) ++avail[static_cast<size_t>(p - 1)];
    WordVector acc;
    blocks_recurse(avail, beta, 0, /*partitions_only=*/true, acc, visit);
}

void for_each_lw(const Partition& lambda, const Composition& beta,
                 const std::function<void(const WordVector&)>& visit) {
    if (lambda.size() != beta.size()) return;
    for_each_lattice_word(lambda, [&](const Word& w) { visit(split_by(w, beta)); });
}

std::vector<WordVector> collect_wv(const std::vector<int>& letter_mults, const Composition& beta) {
    std::vector<WordVector> all;
    for_each_wv(letter_mults, beta, [&](const WordVector& wv) { all.push_back(wv); });
    return all;
}

std::vector<WordVector> collect_pr(const Partition& alpha, const Composition& beta) {
    std::vector<WordVector> all;
    for_each_pr(alpha, beta, [&](const WordVector& wv) { all.push_back(wv); });
    return all;
}

std::vector<WordVector> collect_lw(const Partition& lambda, const Composition& beta) {
    std::vector<WordVector> all;
    for_each_lw(lambda, beta, [&](const WordVector& wv) { all.push_back(wv); });
    return all;
}

Word concatenate(const WordVector& wv) {
    Word w;
    for (const Word& part : wv) w.insert(w.end(), part.begin(), part.end());
    return w;
}

} // namespace thetapark
