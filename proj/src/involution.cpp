#include "thetapark/involution.hpp"

#include <algorithm>
#include <numeric>

#include "thetapark/word_vectors.hpp"

namespace thetapark {

int asc_between(const LabeledCCT& a, const LabeledCCT& b) {
    Word joined = a.w;
    joined.push_back(b.w.front());
    int count = 0;
    for (size_t i = 0; i + 1 < joined.size(); ++i)
        if (joined[i] < joined[i + 1]) ++count;
    return count;
}

std::optional<std::pair<LabeledCCT, LabeledCCT>> try_split(const LabeledCCT& s) {
    if (s.cct.alpha.length() < 2) return std::nullopt;
    const int v = s.cct.alpha.part(0);
    int d = 0;
    for (int i = 0; i < v; ++i)
        if (s.w[static_cast<size_t>(i)] < s.w[static_cast<size_t>(i + 1)]) ++d;
    int head_labels = std::accumulate(s.l.begin(), s.l.begin() + v, 0);
    const int lift = d + head_labels;

    LabeledCCT head, tail;
    head.cct.alpha = Composition{v};
    head.cct.c.assign(s.cct.c.begin(), s.cct.c.begin() + v);
    head.w.assign(s.w.begin(), s.w.begin() + v);
    head.l.assign(s.l.begin(), s.l.begin() + v);

    std::vector<int> tail_alpha(s.cct.alpha.parts().begin() + 1, s.cct.alpha.parts().end());
    tail.cct.alpha = Composition(std::move(tail_alpha));
    tail.cct.c.assign(s.cct.c.begin() + v, s.cct.c.end());
    for (int& h : tail.cct.c) h += lift;
    tail.w.assign(s.w.begin() + v, s.w.end());
    tail.l.assign(s.l.begin() + v, s.l.end());
    return std::make_pair(std::move(head), std::move(tail));
}

bool can_join(const LabeledCCT& a, const LabeledCCT& b) {
    int suml = std::accumulate(a.l.begin(), a.l.end(), 0);
    return b.cct.c.front() >= a.cct.c.back() + asc_between(a, b) + suml;
}

std::optional<LabeledCCT> try_join(const LabeledCCT& a, const LabeledCCT& b) {
    if (!can_join(a, b)) return std::nullopt;
    int suml = std::accumulate(a.l.begin(), a.l.end(), 0);
    const int drop = asc_between(a, b) + suml;
    LabeledCCT joined;
    std::vector<int> alpha = a.cct.alpha.parts();
    alpha.insert(alpha.end(), b.cct.alpha.parts().begin(), b.cct.alpha.parts().end());
    joined.cct.alpha = Composition(std::move(alpha));
    joined.cct.c = a.cct.c;
    for (int h : b.cct.c) joined.cct.c.push_back(h - drop);
    joined.w = a.w;
    joined.w.insert(joined.w.end(), b.w.begin(), b.w.end());
    joined.l = a.l;
    joined.l.insert(joined.l.end(), b.l.begin(), b.l.end());
    return joined;
}

LCSeq psi(const LCSeq& seq) {
    LCSeq out = seq;
    for (size_t i = 0; i < out.items.size(); ++i) {
        if (auto pieces = try_split(out.items[i])) {
            out.items[i] = pieces->first;
            out.items.insert(out.items.begin() + static_cast<long>(i) + 1, pieces->second);
            return out;
        }
        if (i + 1 < out.items.size()) {
            if (auto joined = try_join(out.items[i], out.items[i + 1])) {
                out.items[i] = *joined;
                out.items.erase(out.items.begin() + static_cast<long>(i) + 1);
                return out;
            }
        }
    }
    return out;
}

bool is_psi_fixed(const LCSeq& seq) {
    for (size_t i = 0; i < seq.items.size(); ++i) {
        if (seq.items[i].cct.alpha.length() > 1) return false;
        if (i + 1 < seq.items.size() && can_join(seq.items[i], seq.items[i + 1])) return false;
    }
    return true;
}

void for_each_fixed_point(const Partition& lambda, const Partition& eta, const Partition& gamma,
                          const std::function<void(const LCSeq&)>& visit) {
    const int n = lambda.size();
    if (eta.size() != n || n == 0) {
        if (n == 0 && eta.empty() && gamma.empty()) visit(LCSeq{});
        return;
    }
    // bar-free tableaux force the block sizes to rearrange eta
    for_each_rearrangement(eta, [&](const Composition& beta) {
        for_each_wv(lambda.parts(), beta, [&](const WordVector& wv) {
            for_each_wv(gamma.multiplicities(), beta, [&](const WordVector& lv) {
                const int r = beta.length();
                std::vector<int> heights(static_cast<size_t>(r), 0);
                auto chain = [&](auto&& self, int i) -> void {
                    if (i == r) {
                        LCSeq seq;
                        seq.items.reserve(static_cast<size_t>(r));
                        for (int j = 0; j < r; ++j) {
                            CCT cell{Composition{beta.part(j)},
                                     std::vector<int>(static_cast<size_t>(beta.part(j)),
                                                      heights[static_cast<size_t>(j)])};
                            seq.items.push_back(LabeledCCT{std::move(cell), wv[static_cast<size_t>(j)],
                                                           lv[static_cast<size_t>(j)]});
                        }
                        visit(seq);
                        return;
                    }
                    // c(T_{i+1}) < c(T_i) + asc(T_i;T_{i+1}) + |l(T_i)|
                    Word joined = wv[static_cast<size_t>(i - 1)];
                    joined.push_back(wv[static_cast<size_t>(i)].front());
                    int asc = 0;
                    for (size_t p = 0; p + 1 < joined.size(); ++p)
                        if (joined[p] < joined[p + 1]) ++asc;
                    int suml = std::accumulate(lv[static_cast<size_t>(i - 1)].begin(),
                                               lv[static_cast<size_t>(i - 1)].end(), 0);
                    int bound = heights[static_cast<size_t>(i - 1)] + asc + suml;
                    for (int c = 0; c < bound; ++c) {
                        heights[static_cast<size_t>(i)] = c;
                        self(self, i + 1);
                    }
                };
                chain(chain, 1);
            });
        });
    });
}

} // namespace thetapark
