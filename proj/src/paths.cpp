#include "thetapark/paths.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thetapark {

int PathPair::height() const { return count_steps(top, 'N'); }
int PathPair::width() const { return count_steps(top, 'E'); }

bool valid_steps(const std::string& path) {
    return std::all_of(path.begin(), path.end(), [](char c) { return c == 'N' || c == 'E'; });
}

int count_steps(const std::string& path, char step) {
    return static_cast<int>(std::count(path.begin(), path.end(), step));
}

std::vector<int> north_positions(const std::string& path) {
    std::vector<int> xs;
    int x = 0;
    for (char c : path) {
        if (c == 'E') ++x;
        else xs.push_back(x);
    }
    return xs;
}

std::vector<int> east_counts(const std::string& path, int height) {
    std::vector<int> counts(static_cast<size_t>(height) + 1, 0);
    int y = 0;
    for (char c : path) {
        if (c == 'N') ++y;
        else ++counts[static_cast<size_t>(y)];
    }
    return counts;
}

std::string path_from_east_counts(const std::vector<int>& counts) {
    std::string path;
    for (size_t y = 0; y < counts.size(); ++y) {
        if (y) path += 'N';
        path.append(static_cast<size_t>(counts[y]), 'E');
    }
    return path;
}

std::vector<int> north_runs(const std::string& path) {
    std::vector<int> runs;
    int current = 0;
    for (char c : path) {
        if (c == 'N') {
            ++current;
        } else if (current > 0) {
            runs.push_back(current);
            current = 0;
        }
    }
    if (current > 0) runs.push_back(current);
    return runs;
}

bool is_parallelogram_polyomino(const std::string& top, const std::string& bottom) {
    if (!valid_steps(top) || !valid_steps(bottom)) return false;
    const int n = count_steps(top, 'N');
    const int m = count_steps(top, 'E');
    if (n != count_steps(bottom, 'N') || m != count_steps(bottom, 'E')) return false;
    if (n < 1 || m < 1) return false;
    std::vector<int> nt = north_positions(top), nb = north_positions(bottom);
    if (nt.front() != 0) return false;      // top starts North
    if (nb.back() != m) return false;       // bottom ends North
    for (int y = 1; y < n; ++y)
        if (nt[static_cast<size_t>(y)] >= nb[static_cast<size_t>(y - 1)]) return false;
    return true;
}

long polyomino_area(const std::string& top, const std::string& bottom) {
    if (!is_parallelogram_polyomino(top, bottom)) throw std::invalid_argument("not a parallelogram polyomino");
    std::vector<int> nt = north_positions(top), nb = north_positions(bottom);
    long cells = 0;
    for (size_t y = 0; y < nt.size(); ++y) cells += nb[y] - nt[y];
    const int n = count_steps(top, 'N');
    const int m = count_steps(top, 'E');
    return cells - (m + n - 1);
}

long area(const PathPair& p) { return polyomino_area(p.top, p.bottom); }

Partition eta_partition(const std::string& top) {
    std::vector<int> runs = north_runs(top);
    std::sort(runs.begin(), runs.end(), std::greater<int>());
    return Partition(std::move(runs));
}

bool labels_increase_on_runs(const std::string& top, const Word& labels) {
    if (static_cast<size_t>(count_steps(top, 'N')) != labels.size()) return false;
    size_t i = 0;
    char prev = 'E';
    for (char c : top) {
        if (c == 'N') {
            if (prev == 'N' && labels[i] <= labels[i - 1]) return false;
            ++i;
        }
        prev = c;
    }
    return true;
}

bool is_gamma_dyck(const PathPair& p, const Partition& gamma) {
    const int n = p.height();
    if (!is_parallelogram_polyomino(p.top, p.bottom)) return false;
    if (p.bottom.find("NN") != std::string::npos) return false;
    if (!labels_increase_on_runs(p.top, p.labels)) return false;
    if (gamma.length() > n) return false;
    std::vector<int> rows = east_counts(p.bottom, n);
    if (rows[static_cast<size_t>(n)] != 0) return false;
    rows.pop_back();
    rows[0] -= 1;
    std::vector<int> expected(gamma.parts());
    expected.resize(static_cast<size_t>(n), 0);
    for (int& r : expected) r += 1;
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    std::sort(expected.begin(), expected.end(), std::greater<int>());
    return rows == expected;
}

namespace {

std::vector<bool> pruned_mask(const PathPair& p) {
    const int n = p.height();
    if (static_cast<int>(p.labels.size()) != n) throw std::invalid_argument("e-composition needs labels");
    std::vector<int> asc = ascent_set(p.labels);
    std::set<int> ascents(asc.begin(), asc.end());
    // mark the first East step after the i-th North step, for i not an ascent
    std::vector<bool> removed(p.top.size(), false);
    int seen_north = 0;
    std::vector<size_t> north_index(static_cast<size_t>(n), 0);
    for (size_t s = 0; s < p.top.size(); ++s)
        if (p.top[s] == 'N') north_index[static_cast<size_t>(seen_north++)] = s;
    for (int i = 1; i <= n; ++i) {
        if (ascents.count(i)) continue;
        bool found = false;
        for (size_t s = north_index[static_cast<size_t>(i - 1)] + 1; s < p.top.size(); ++s) {
            if (p.top[s] == 'E' && !removed[s]) {
                removed[s] = true;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("malformed labeled path: no East step to prune");
    }
    return removed;
}

} // namespace

Composition e_composition(const PathPair& p) {
    std::vector<bool> removed = pruned_mask(p);
    std::string pruned;
    for (size_t s = 0; s < p.top.size(); ++s)
        if (!removed[s]) pruned += p.top[s];
    std::vector<int> runs = north_runs(pruned);
    return Composition(std::move(runs));
}

std::vector<std::pair<int, int>> pruned_east_steps(const PathPair& p) {
    std::vector<bool> removed = pruned_mask(p);
    std::vector<std::pair<int, int>> marks;
    int x = 0, y = 0;
    for (size_t s = 0; s < p.top.size(); ++s) {
        if (p.top[s] == 'E') {
            if (removed[s]) marks.emplace_back(x, y);
            ++x;
        } else {
            ++y;
        }
    }
    return marks;
}

void for_each_top_above(const std::string& bottom,
                        const std::function<void(const std::string&)>& visit) {
    const int n = count_steps(bottom, 'N');
    const int m = count_steps(bottom, 'E');
    if (n < 1 || m < 1) return;
    std::vector<int> nb = north_positions(bottom);
    if (nb.back() != m) return; // bottom must end North
    std::vector<int> nt(static_cast<size_t>(n), 0);
    auto recurse = [&](auto&& self, int y) -> void {
        if (y == n) {
            std::string top;
            for (int i = 0; i < n; ++i) {
                top += 'N';
                int next = i + 1 < n ? nt[static_cast<size_t>(i + 1)] : m;
                top.append(static_cast<size_t>(next - nt[static_cast<size_t>(i)]), 'E');
            }
            visit(top);
            return;
        }
        for (int x = nt[static_cast<size_t>(y - 1)]; x < nb[static_cast<size_t>(y - 1)]; ++x) {
            nt[static_cast<size_t>(y)] = x;
            self(self, y + 1);
        }
    };
    recurse(recurse, 1);
}

void for_each_polyomino(int width, int height,
                        const std::function<void(const std::string&, const std::string&)>& visit) {
    if (width < 1 || height < 1) return;
    // bottoms: East counts per row with every North position <= width, ending North
    std::vector<int> nb(static_cast<size_t>(height), 0);
    nb[static_cast<size_t>(height - 1)] = width;
    auto recurse = [&](auto&& self, int y) -> void {
        if (y == height - 1) {
            std::string bottom;
            int prev = 0;
            for (int i = 0; i < height; ++i) {
                bottom.append(static_cast<size_t>(nb[static_cast<size_t>(i)] - prev), 'E');
                bottom += 'N';
                prev = nb[static_cast<size_t>(i)];
            }
            for_each_top_above(bottom, [&](const std::string& top) { visit(top, bottom); });
            return;
        }
        int lo = y == 0 ? 0 : nb[static_cast<size_t>(y - 1)];
        for (int x = lo; x <= width; ++x) {
            nb[static_cast<size_t>(y)] = x;
            self(self, y + 1);
        }
    };
    recurse(recurse, 0);
}

void for_each_gamma_dyck_bottom(const Partition& gamma, int n,
                                const std::function<void(const std::string&)>& visit) {
    if (gamma.length() > n) return;
    std::vector<int> padded = gamma.parts();
    padded.resize(static_cast<size_t>(n), 0);
    for (int& p : padded) p += 1;
    std::sort(padded.begin(), padded.end());
    do {
        std::string bottom;
        for (int i = 0; i < n; ++i) {
            int easts = padded[static_cast<size_t>(i)] + (i == 0 ? 1 : 0);
            bottom.append(static_cast<size_t>(easts), 'E');
            bottom += 'N';
        }
        visit(bottom);
    } while (std::next_permutation(padded.begin(), padded.end()));
}

void for_each_run_labeling(const std::string& top, const std::vector<int>& letter_mults, bool lattice,
                           const std::function<void(const Word&)>& visit) {
    const int n = count_steps(top, 'N');
    int total = std::accumulate(letter_mults.begin(), letter_mults.end(), 0);
    if (total != n) return;
    // adjacent[i] marks North steps i and i+1 with no East step in between
    std::vector<bool> adjacent(static_cast<size_t>(std::max(0, n - 1)), false);
    int idx = 0;
    char prev = 'E';
    for (char c : top) {
        if (c == 'N') {
            if (prev == 'N' && idx >= 1) adjacent[static_cast<size_t>(idx - 1)] = true;
            ++idx;
        }
        prev = c;
    }
    const int letters = static_cast<int>(letter_mults.size());
    std::vector<int> remaining = letter_mults;
    std::vector<int> used(static_cast<size_t>(letters), 0);
    Word w;
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            visit(w);
            return;
        }
        size_t pos = w.size();
        for (int letter = 1; letter <= letters; ++letter) {
            if (remaining[static_cast<size_t>(letter - 1)] == 0) continue;
            if (pos > 0 && adjacent[pos - 1] && w.back() >= letter) continue;
            if (lattice && letter >= 2 && used[static_cast<size_t>(letter - 1)] + 1 > used[static_cast<size_t>(letter - 2)])
                continue;
            --remaining[static_cast<size_t>(letter - 1)];
            ++used[static_cast<size_t>(letter - 1)];
            w.push_back(letter);
            self(self);
            w.pop_back();
            ++remaining[static_cast<size_t>(letter - 1)];
            --used[static_cast<size_t>(letter - 1)];
        }
    };
    recurse(recurse);
}

void for_each_pf(const Partition& gamma, const std::vector<int>& content_mults,
                 const std::function<void(const PathPair&)>& visit) {
    int n = std::accumulate(content_mults.begin(), content_mults.end(), 0);
    for_each_gamma_dyck_bottom(gamma, n, [&](const std::string& bottom) {
        for_each_top_above(bottom, [&](const std::string& top) {
            for_each_run_labeling(top, content_mults, false, [&](const Word& w) {
                visit(PathPair{top, bottom, w});
            });
        });
    });
}

void for_each_lpf(const Partition& gamma, const Partition& lambda,
                  const std::function<void(const PathPair&)>& visit) {
    const int n = lambda.size();
    for_each_gamma_dyck_bottom(gamma, n, [&](const std::string& bottom) {
        for_each_top_above(bottom, [&](const std::string& top) {
            for_each_run_labeling(top, lambda.parts(), true, [&](const Word& w) {
                visit(PathPair{top, bottom, w});
            });
        });
    });
}

std::vector<int> subset_positions(SubsetStat s, const Word& w) {
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(w.size()); ++i) {
        bool asc = w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)];
        bool des = w[static_cast<size_t>(i - 1)] > w[static_cast<size_t>(i)];
        if ((s == SubsetStat::Asc && asc) || (s == SubsetStat::Des && des)) out.push_back(i);
    }
    return out;
}

long looks_right_stat(SubsetStat s, const Word& w) {
    long total = 0;
    const int n = static_cast<int>(w.size());
    for (int i : subset_positions(s, w)) total += n - i;
    return total;
}

void for_each_s_labeled_pp(SubsetStat s, const std::vector<int>& content_mults, const Partition& gamma,
                           const std::function<void(const PathPair&)>& visit) {
    const int n = std::accumulate(content_mults.begin(), content_mults.end(), 0);
    if (gamma.length() > n) return;
    // words of the given content
    Word base;
    for (size_t i = 0; i < content_mults.size(); ++i)
        base.insert(base.end(), static_cast<size_t>(content_mults[i]), static_cast<int>(i) + 1);
    std::sort(base.begin(), base.end());
    if (base.empty()) return;
    do {
        std::vector<int> picks = subset_positions(s, base);
        std::set<int> pick_set(picks.begin(), picks.end());
        // distribute gamma's parts over the n rows
        std::vector<int> surplus(gamma.parts());
        surplus.resize(static_cast<size_t>(n), 0);
        std::sort(surplus.begin(), surplus.end());
        do {
            std::vector<int> counts(static_cast<size_t>(n) + 1, 0);
            for (int y = 0; y < n; ++y)
                counts[static_cast<size_t>(y)] = surplus[static_cast<size_t>(y)] +
                                                 (y == 0 ? 1 : 0) +
                                                 (pick_set.count(y + 1) ? 1 : 0);
            std::string bottom;
            for (int y = 0; y < n; ++y) {
                bottom.append(static_cast<size_t>(counts[static_cast<size_t>(y)]), 'E');
                bottom += 'N';
            }
            for_each_top_above(bottom, [&](const std::string& top) {
                visit(PathPair{top, bottom, base});
            });
        } while (std::next_permutation(surplus.begin(), surplus.end()));
    } while (std::next_permutation(base.begin(), base.end()));
}

namespace {

PathPair adjust_rows(const PathPair& p, int delta) {
    const int n = p.height();
    std::vector<int> asc = ascent_set(p.labels);
    std::set<int> ascents(asc.begin(), asc.end());
    std::vector<int> tc = east_counts(p.top, n);
    std::vector<int> bc = east_counts(p.bottom, n);
    for (int i = 1; i <= n; ++i) {
        if (ascents.count(i)) continue;
        tc[static_cast<size_t>(i)] += delta;
        bc[static_cast<size_t>(i - 1)] += delta;
        if (tc[static_cast<size_t>(i)] < 0 || bc[static_cast<size_t>(i - 1)] < 0)
            throw std::invalid_argument("path has no East step to remove");
    }
    return PathPair{path_from_east_counts(tc), path_from_east_counts(bc), p.labels};
}

} // namespace

PathPair iota(const PathPair& p) {
    if (static_cast<int>(p.labels.size()) != p.height())
        throw std::invalid_argument("iota needs a fully labeled path");
    return adjust_rows(p, -1);
}

PathPair iota_inverse(const PathPair& p) {
    if (static_cast<int>(p.labels.size()) != p.height())
        throw std::invalid_argument("iota inverse needs a fully labeled path");
    return adjust_rows(p, +1);
}

} // namespace thetapark
