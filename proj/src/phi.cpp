#include "thetapark/phi.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "thetapark/involution.hpp"

namespace thetapark {

PathPair phi(const LCSeq& seq) {
    if (!is_psi_fixed(seq)) throw std::invalid_argument("phi requires a fixed point of psi");
    const int r = static_cast<int>(seq.items.size());
    Word w = seq.word();
    Word l = seq.labels();
    const int n = static_cast<int>(w.size());

    std::vector<int> asc = ascent_set(w);
    std::set<int> ascents(asc.begin(), asc.end());
    std::string bottom = "E";
    for (int i = 1; i <= n; ++i) {
        int easts = l[static_cast<size_t>(i - 1)] + (ascents.count(i) ? 1 : 0);
        bottom.append(static_cast<size_t>(easts), 'E');
        bottom += 'N';
    }

    std::string top;
    for (int i = 0; i < r; ++i) {
        const LabeledCCT& item = seq.items[static_cast<size_t>(i)];
        top.append(static_cast<size_t>(item.cct.length()), 'N');
        int height = item.cct.c.back();
        int suml = std::accumulate(item.l.begin(), item.l.end(), 0);
        // for the last tableau there is no boundary letter, so only the
        // ascents inside its own word count
        int asc_next = i + 1 < r ? asc_between(item, seq.items[static_cast<size_t>(i + 1)])
                                 : static_cast<int>(ascent_set(item.w).size());
        int next_height = i + 1 < r ? seq.items[static_cast<size_t>(i + 1)].cct.c.front() : 0;
        int easts = height + asc_next + suml - next_height;
        if (easts < 0) throw std::logic_error("negative East run in phi image");
        top.append(static_cast<size_t>(easts), 'E');
    }
    top += 'E';
    return PathPair{top, bottom, w};
}

LCSeq phi_inverse(const PathPair& p) {
    const int n = p.height();
    if (static_cast<int>(p.labels.size()) != n) throw std::invalid_argument("phi_inverse needs labels");
    const Word& w = p.labels;
    std::vector<int> asc = ascent_set(w);
    std::set<int> ascents(asc.begin(), asc.end());

    // labels beneath the base rows, from the bottom-path row East counts
    std::vector<int> rows = east_counts(p.bottom, n);
    Word l(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int v = rows[static_cast<size_t>(i - 1)] - (i == 1 ? 1 : 0) - (ascents.count(i) ? 1 : 0);
        if (v < 0) throw std::invalid_argument("bottom path is not ascent labeled");
        l[static_cast<size_t>(i - 1)] = v;
    }

    // segment the word by the North runs of the top path; the East runs
    // between them recover the constant column heights
    std::vector<int> runs = north_runs(p.top);
    const int r = static_cast<int>(runs.size());
    std::vector<int> easts;
    {
        int current = 0;
        bool in_east = false;
        bool seen_north = false;
        for (char c : p.top) {
            if (c == 'E') {
                if (seen_north) {
                    current += 1;
                    in_east = true;
                }
            } else {
                if (in_east) {
                    easts.push_back(current);
                    current = 0;
                    in_east = false;
                }
                seen_north = true;
            }
        }
        if (in_east) easts.push_back(current);
    }
    if (static_cast<int>(easts.size()) != r) throw std::invalid_argument("top path does not end with East");
    easts.back() -= 1; // the final mandatory East step

    LCSeq seq;
    seq.items.resize(static_cast<size_t>(r));
    int pos = 0;
    int height = 0;
    for (int i = 0; i < r; ++i) {
        LabeledCCT& item = seq.items[static_cast<size_t>(i)];
        int len = runs[static_cast<size_t>(i)];
        item.cct.alpha = Composition{len};
        item.cct.c.assign(static_cast<size_t>(len), height);
        item.w.assign(w.begin() + pos, w.begin() + pos + len);
        item.l.assign(l.begin() + pos, l.begin() + pos + len);
        pos += len;
        if (i + 1 < r) {
            // c(T_{i+1}) = c(T_i) + asc(T_i; w_next) + |l(T_i)| - s_i
            int asc_next = 0;
            Word joined = item.w;
            joined.push_back(w[static_cast<size_t>(pos)]);
            for (size_t j = 0; j + 1 < joined.size(); ++j)
                if (joined[j] < joined[j + 1]) ++asc_next;
            int suml = std::accumulate(item.l.begin(), item.l.end(), 0);
            height = height + asc_next + suml - easts[static_cast<size_t>(i)];
            if (height < 0) throw std::invalid_argument("path does not come from a fixed point");
        }
    }
    if (!is_psi_fixed(seq)) throw std::invalid_argument("image is not a fixed point");
    return seq;
}

} // namespace thetapark
