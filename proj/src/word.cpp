#include "thetapark/word.hpp"

#include <algorithm>

namespace thetapark {

WordStats word_stats(const Word& w) {
    WordStats s;
    const int n = static_cast<int>(w.size());
    for (int i = 1; i < n; ++i) {
        if (w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)]) s.asc.push_back(i);
        if (w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(i)]) s.des.push_back(i);
    }
    for (int i : s.des) {
        s.maj += i;
        s.comaj += n - i;
    }
    for (int i : s.asc) {
        s.revmaj += n - i;
        s.revcomaj += i;
    }
    return s;
}

long revmaj(const Word& w) {
    const int n = static_cast<int>(w.size());
    long total = 0;
    for (int i = 1; i < n; ++i)
        if (w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)]) total += n - i;
    return total;
}

std::vector<int> ascent_set(const Word& w) {
    std::vector<int> asc;
    for (int i = 1; i < static_cast<int>(w.size()); ++i)
        if (w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)]) asc.push_back(i);
    return asc;
}

std::vector<int> multiplicity_type(const Word& w) {
    std::vector<int> mult;
    for (int x : w) {
        if (x >= static_cast<int>(mult.size())) mult.resize(static_cast<size_t>(x) + 1, 0);
        ++mult[static_cast<size_t>(x)];
    }
    return mult;
}

std::vector<int> content(const Word& w) {
    std::vector<int> mult = multiplicity_type(w);
    if (mult.empty()) return {};
    return std::vector<int>(mult.begin() + 1, mult.end());
}

bool is_lattice_word(const Word& w) {
    std::vector<int> seen;
    for (int x : w) {
        if (x <= 0) return false;
        if (x > static_cast<int>(seen.size())) seen.resize(static_cast<size_t>(x), 0);
        ++seen[static_cast<size_t>(x - 1)];
        if (x >= 2 && seen[static_cast<size_t>(x - 1)] > seen[static_cast<size_t>(x - 2)]) return false;
    }
    return true;
}

void for_each_rearrangement(const Partition& mu, const std::function<void(const Composition&)>& visit) {
    std::vector<int> parts = mu.parts();
    std::sort(parts.begin(), parts.end());
    do {
        visit(Composition(parts));
    } while (std::next_permutation(parts.begin(), parts.end()));
}

std::vector<Composition> rearrangements(const Partition& mu) {
    std::vector<Composition> all;
    for_each_rearrangement(mu, [&](const Composition& c) { all.push_back(c); });
    return all;
}

Int count_rearrangements(const Partition& mu) {
    Int count = 1;
    for (int i = 2; i <= mu.length(); ++i) count *= i;
    for (int m : mu.multiplicities()) {
        Int f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        count /= f;
    }
    return count;
}

void for_each_lattice_word(const Partition& lambda, const std::function<void(const Word&)>& visit) {
    const int n = lambda.size();
    const int rows = lambda.length();
    Word w;
    std::vector<int> count(static_cast<size_t>(rows), 0);
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            visit(w);
            return;
        }
        for (int j = 1; j <= rows; ++j) {
            if (count[static_cast<size_t>(j - 1)] >= lambda.part(j - 1)) continue;
            if (j >= 2 && count[static_cast<size_t>(j - 1)] + 1 > count[static_cast<size_t>(j - 2)]) continue;
            ++count[static_cast<size_t>(j - 1)];
            w.push_back(j);
            self(self);
            w.pop_back();
            --count[static_cast<size_t>(j - 1)];
        }
    };
    recurse(recurse);
}

} // namespace thetapark
