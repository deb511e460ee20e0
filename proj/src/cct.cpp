#include "thetapark/cct.hpp"

#include <algorithm>
#include <numeric>

#include "thetapark/word_vectors.hpp"

namespace thetapark {

long CCT::size() const {
    return std::accumulate(c.begin(), c.end(), 0L);
}

bool CCT::valid() const {
    if (alpha.size() != length()) return false;
    std::vector<bool> is_bar(c.size() + 1, false);
    int prefix = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        prefix += alpha.part(i);
        is_bar[static_cast<size_t>(prefix)] = true;
    }
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) return false;
        if (i + 1 < c.size()) {
            if (c[i] > c[i + 1]) return false;
            if (c[i] < c[i + 1] && !is_bar[i + 1]) return false;
        }
    }
    return true;
}

bool operator==(const CCT& a, const CCT& b) { return a.alpha == b.alpha && a.c == b.c; }

bool LabeledCCT::valid() const {
    if (!cct.valid()) return false;
    if (static_cast<int>(w.size()) != cct.length() || static_cast<int>(l.size()) != cct.length()) return false;
    for (int x : w)
        if (x <= 0) return false;
    for (int x : l)
        if (x < 0) return false;
    return true;
}

Composition LCSeq::beta() const {
    std::vector<int> parts;
    parts.reserve(items.size());
    for (const LabeledCCT& t : items) parts.push_back(t.cct.length());
    return Composition(std::move(parts));
}

Word LCSeq::word() const {
    Word w;
    for (const LabeledCCT& t : items) w.insert(w.end(), t.w.begin(), t.w.end());
    return w;
}

Word LCSeq::labels() const {
    Word l;
    for (const LabeledCCT& t : items) l.insert(l.end(), t.l.begin(), t.l.end());
    return l;
}

long u_statistic(const Word& l) {
    const int len = static_cast<int>(l.size());
    long total = 0;
    for (int j = 1; j <= len; ++j) total += static_cast<long>(l[static_cast<size_t>(j - 1)]) * (len - j);
    return total;
}

long weight(const LabeledCCT& t) {
    return t.cct.size() + revmaj(t.w) + u_statistic(t.l);
}

int sign(const LabeledCCT& t) { return t.cct.bars() % 2 == 0 ? 1 : -1; }

std::pair<long, int> lc_weight_sign(const LCSeq& seq) {
    long w = 0;
    int s = 1;
    for (const LabeledCCT& t : seq.items) {
        w += weight(t);
        s *= sign(t);
    }
    return {w, s};
}

bool valid_lcseq(const LCSeq& seq, const Partition& lambda, const Partition& eta, const Partition& gamma) {
    const int n = lambda.size();
    if (eta.size() != n) return false;
    std::vector<int> type_parts, label_letters;
    for (const LabeledCCT& t : seq.items) {
        if (!t.valid()) return false;
        for (int p : t.cct.alpha.parts()) type_parts.push_back(p);
        for (int x : t.l)
            if (x > 0) label_letters.push_back(x);
    }
    if (!seq.items.empty() && seq.items.front().cct.c.front() != 0) return false;
    if (seq.items.empty()) return n == 0 && gamma.empty();
    std::sort(type_parts.begin(), type_parts.end(), std::greater<int>());
    if (Partition(type_parts) != eta) return false;
    if (content(seq.word()) != lambda.parts()) return false;
    std::sort(label_letters.begin(), label_letters.end(), std::greater<int>());
    return Partition(label_letters) == gamma;
}

void for_each_cct(const Partition& mu, long max_size, bool first_column_zero,
                  const std::function<void(const CCT&)>& visit) {
    if (max_size < 0) return;
    for_each_rearrangement(mu, [&](const Composition& alpha) {
        const int blocks = alpha.length();
        std::vector<int> values(static_cast<size_t>(blocks), 0);
        auto recurse = [&](auto&& self, int block, int lower, long budget) -> void {
            if (block == blocks) {
                std::vector<int> c;
                c.reserve(static_cast<size_t>(alpha.size()));
                for (int b = 0; b < blocks; ++b)
                    c.insert(c.end(), static_cast<size_t>(alpha.part(b)), values[static_cast<size_t>(b)]);
                visit(CCT{alpha, std::move(c)});
                return;
            }
            const long width = alpha.part(block);
            int from = block == 0 && first_column_zero ? 0 : lower;
            int to = block == 0 && first_column_zero ? 0 : static_cast<int>(budget / width);
            for (int v = from; v <= to; ++v) {
                values[static_cast<size_t>(block)] = v;
                self(self, block + 1, v, budget - width * v);
            }
        };
        recurse(recurse, 0, 0, max_size);
    });
}

void for_each_lc_sequence(const Partition& lambda, const Partition& eta, const Partition& gamma,
                          long max_weight, const std::function<void(const LCSeq&)>& visit) {
    const int n = lambda.size();
    if (eta.size() != n) return;
    if (n == 0) {
        if (gamma.empty() && max_weight >= 0) visit(LCSeq{});
        return;
    }
    for (const Composition& beta : compositions_of(n)) {
        for_each_wv(lambda.parts(), beta, [&](const WordVector& wv) {
            long word_weight = 0;
            for (const Word& seg : wv) word_weight += revmaj(seg);
            if (word_weight > max_weight) return;
            for_each_wv(gamma.multiplicities(), beta, [&](const WordVector& lv) {
                long base = word_weight;
                for (const Word& seg : lv) base += u_statistic(seg);
                if (base > max_weight) return;
                // distribute eta's parts over the blocks as tableau types
                std::vector<int> avail(static_cast<size_t>(eta.part(0)), 0);
                for (int p : eta.parts()) ++avail[static_cast<size_t>(p - 1)];
                std::vector<CCT> chosen(static_cast<size_t>(beta.length()));
                auto per_block = [&](auto&& self, int block, long budget) -> void {
                    if (block == beta.length()) {
                        LCSeq seq;
                        seq.items.reserve(chosen.size());
                        for (size_t i = 0; i < chosen.size(); ++i)
                            seq.items.push_back(LabeledCCT{chosen[i], wv[i], lv[i]});
                        visit(seq);
                        return;
                    }
                    // all compositions of beta_block drawn from the remaining parts,
                    // then weakly increasing block heights within the weight budget
                    Word alpha_parts;
                    auto pick = [&](auto&& pick_self, int remaining) -> void {
                        if (remaining == 0) {
                            Composition alpha(std::vector<int>(alpha_parts.begin(), alpha_parts.end()));
                            const int segments = alpha.length();
                            std::vector<int> values(static_cast<size_t>(segments), 0);
                            auto heights = [&](auto&& h_self, int seg, int lower, long left) -> void {
                                if (seg == segments) {
                                    std::vector<int> c;
                                    for (int b = 0; b < segments; ++b)
                                        c.insert(c.end(), static_cast<size_t>(alpha.part(b)),
                                                 values[static_cast<size_t>(b)]);
                                    chosen[static_cast<size_t>(block)] = CCT{alpha, std::move(c)};
                                    self(self, block + 1, left);
                                    return;
                                }
                                const long width = alpha.part(seg);
                                const bool pinned = block == 0 && seg == 0; // c_1(C^1) = 0
                                int from = pinned ? 0 : lower;
                                int to = pinned ? 0 : static_cast<int>(left / width);
                                for (int v = from; v <= to; ++v) {
                                    values[static_cast<size_t>(seg)] = v;
                                    h_self(h_self, seg + 1, v, left - width * v);
                                }
                            };
                            heights(heights, 0, 0, budget);
                            return;
                        }
                        for (int p = 1; p <= remaining && p <= static_cast<int>(avail.size()); ++p) {
                            if (avail[static_cast<size_t>(p - 1)] == 0) continue;
                            --avail[static_cast<size_t>(p - 1)];
                            alpha_parts.push_back(p);
                            pick_self(pick_self, remaining - p);
                            alpha_parts.pop_back();
                            ++avail[static_cast<size_t>(p - 1)];
                        }
                    };
                    pick(pick, beta.part(block));
                };
                per_block(per_block, 0, max_weight - base);
            });
        });
    }
}

} // namespace thetapark
