#include "thetapark/extended_delta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thetapark/paths.hpp"

namespace thetapark {

std::string ColoredBottom::path() const {
    std::string p;
    for (int row = 1; row <= n; ++row) {
        if (row == 1) p += 'E';
        if (std::find(greens.begin(), greens.end(), row) != greens.end()) p += 'E';
        p.append(static_cast<size_t>(std::count(blues.begin(), blues.end(), row)), 'E');
        p += 'N';
    }
    return p;
}

long ColoredParking::area() const { return polyomino_area(top, bottom.path()); }

Partition ColoredParking::eta() const { return eta_partition(top); }

bool is_dyck(const std::string& path) {
    int x = 0, y = 0;
    for (char c : path) {
        if (c == 'N') ++y;
        else ++x;
        if (x > y) return false;
    }
    return x == y;
}

long decorated_area(const DecoratedDyck& d) {
    std::set<int> starred(d.stars.begin(), d.stars.end());
    long total = 0;
    int x = 0, y = 0;
    for (size_t s = 0; s < d.path.size(); ++s) {
        if (d.path[s] == 'N') {
            ++y;
        } else {
            if (!starred.count(static_cast<int>(s))) total += y - x - 1;
            ++x;
        }
    }
    return total;
}

Partition decorated_eta(const DecoratedDyck& d) {
    std::set<int> marked(d.marked.begin(), d.marked.end());
    std::vector<int> runs;
    int current = 0;
    for (size_t s = 0; s < d.path.size(); ++s) {
        if (d.path[s] == 'N') {
            if (!marked.count(static_cast<int>(s))) ++current;
        } else if (current > 0) {
            runs.push_back(current);
            current = 0;
        } else {
            current = 0;
        }
    }
    if (current > 0) runs.push_back(current);
    std::sort(runs.begin(), runs.end(), std::greater<int>());
    return Partition(std::move(runs));
}

namespace {

struct Steps {
    std::string steps;
    std::vector<int> tags; // 0 plain, 1 marked North, 2 starred East

    void insert(size_t pos, char step, int tag) {
        steps.insert(steps.begin() + static_cast<long>(pos), step);
        tags.insert(tags.begin() + static_cast<long>(pos), tag);
    }
};

// position just after the k-th East step (k >= 1); k == 0 gives the start
size_t after_kth_east(const Steps& s, int k) {
    if (k == 0) return 0;
    int seen = 0;
    for (size_t i = 0; i < s.steps.size(); ++i) {
        if (s.steps[i] == 'E' && ++seen == k) return i + 1;
    }
    throw std::logic_error("east step index out of range");
}

} // namespace

DecoratedDyck extended_delta_map(const ColoredParking& source) {
    const int n = source.bottom.n;
    std::string bottom_path = source.bottom.path();
    if (!is_parallelogram_polyomino(source.top, bottom_path))
        throw std::invalid_argument("colored source is not a parallelogram polyomino");

    // bottom with color tags: 0 plain E/N, 3 green, 4 blue
    Steps bottom;
    for (int row = 1; row <= n; ++row) {
        if (row == 1) {
            bottom.steps += 'E';
            bottom.tags.push_back(0);
        }
        if (std::find(source.bottom.greens.begin(), source.bottom.greens.end(), row) !=
            source.bottom.greens.end()) {
            bottom.steps += 'E';
            bottom.tags.push_back(3);
        }
        int count =
            static_cast<int>(std::count(source.bottom.blues.begin(), source.bottom.blues.end(), row));
        for (int b = 0; b < count; ++b) {
            bottom.steps += 'E';
            bottom.tags.push_back(4);
        }
        bottom.steps += 'N';
        bottom.tags.push_back(0);
    }
    Steps top;
    top.steps = source.top;
    top.tags.assign(top.steps.size(), 0);

    // Step 2: a North step before every blue East step, and a marked North in
    // the top after the East step one column to the left of the blue step.
    for (size_t pos = 0; pos < bottom.steps.size(); ++pos) {
        if (bottom.tags[pos] != 4) continue;
        int column = 0;
        for (size_t i = 0; i < pos; ++i)
            if (bottom.steps[i] == 'E') ++column;
        bottom.insert(pos, 'N', 0);
        ++pos; // skip over the blue step we just shifted
        top.insert(after_kth_east(top, column - 1), 'N', 1);
    }

    // Step 3: an East step inside every NN factor of the bottom (and in the
    // first row when it has no green), with a starred East in the top placed
    // right after the East step in the same column.
    bool green_in_first_row =
        std::find(source.bottom.greens.begin(), source.bottom.greens.end(), 1) != source.bottom.greens.end();
    if (!green_in_first_row) {
        bottom.insert(1, 'E', 2);
        top.insert(after_kth_east(top, 1), 'E', 2);
    }
    for (size_t pos = 0; pos + 1 < bottom.steps.size(); ++pos) {
        if (bottom.steps[pos] != 'N' || bottom.steps[pos + 1] != 'N') continue;
        int column = 0;
        for (size_t i = 0; i <= pos; ++i)
            if (bottom.steps[i] == 'E') ++column;
        bottom.insert(pos + 1, 'E', 2);
        top.insert(after_kth_east(top, column), 'E', 2);
    }

    // Step 4: move each star one column left (to the preceding East step).
    for (size_t pos = 0; pos < top.steps.size(); ++pos) {
        if (top.tags[pos] != 2) continue;
        size_t prev = pos;
        do {
            --prev;
        } while (top.steps[prev] != 'E');
        top.tags[prev] = 2;
        top.tags[pos] = 0;
    }

    // Step 5: drop the final East step; the rest is the decorated Dyck path.
    if (top.steps.back() != 'E' || top.tags.back() != 0)
        throw std::logic_error("top path must end with a plain East step");
    top.steps.pop_back();
    top.tags.pop_back();

    DecoratedDyck out;
    out.path = top.steps;
    for (size_t s = 0; s < top.steps.size(); ++s) {
        if (top.tags[s] == 1) out.marked.push_back(static_cast<int>(s));
        if (top.tags[s] == 2) out.stars.push_back(static_cast<int>(s));
    }
    if (!is_dyck(out.path)) throw std::logic_error("image is not a Dyck path");
    return out;
}

void for_each_colored_parking(int n, int k, int m,
                              const std::function<void(const ColoredParking&)>& visit) {
    if (k < 0 || k > n) return;
    const int green_count = n - k;
    std::vector<int> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = i + 1;
    // distinct rows for the greens
    std::vector<int> mask(static_cast<size_t>(n), 0);
    std::fill(mask.begin(), mask.begin() + green_count, 1);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<int> greens;
        for (int i = 0; i < n; ++i)
            if (mask[static_cast<size_t>(i)]) greens.push_back(i + 1);
        // weakly increasing rows for the blues
        std::vector<int> blues(static_cast<size_t>(m), 1);
        auto emit = [&]() {
            ColoredBottom cb{n, greens, blues};
            std::string bottom_path = cb.path();
            for_each_top_above(bottom_path, [&](const std::string& top) {
                visit(ColoredParking{cb, top});
            });
        };
        if (m == 0) {
            emit();
        } else {
            auto advance = [&]() {
                for (size_t i = blues.size(); i-- > 0;) {
                    if (blues[i] < n) {
                        int v = ++blues[i];
                        for (size_t j = i + 1; j < blues.size(); ++j) blues[j] = v;
                        return true;
                    }
                }
                return false;
            };
            do {
                emit();
            } while (advance());
        }
    } while (std::next_permutation(mask.begin(), mask.end()));
}

void for_each_decorated_dyck(int n, int k, int m,
                             const std::function<void(const DecoratedDyck&)>& visit) {
    if (k < 0 || k > n) return;
    const int size = n + m;
    std::string path;
    auto choose_and_emit = [&](const std::string& dyck) {
        std::vector<int> valleys, falls;
        for (size_t s = 0; s < dyck.size(); ++s) {
            if (dyck[s] == 'N' && s > 0 && dyck[s - 1] == 'E') valleys.push_back(static_cast<int>(s));
            if (dyck[s] == 'E' && (s + 1 == dyck.size() || dyck[s + 1] == 'E')) falls.push_back(static_cast<int>(s));
        }
        if (static_cast<int>(valleys.size()) < m || static_cast<int>(falls.size()) < k) return;
        std::vector<int> vmask(valleys.size(), 0), fmask(falls.size(), 0);
        std::fill(vmask.begin(), vmask.begin() + m, 1);
        std::sort(vmask.begin(), vmask.end());
        do {
            std::fill(fmask.begin(), fmask.end(), 0);
            std::fill(fmask.begin(), fmask.begin() + k, 1);
            std::sort(fmask.begin(), fmask.end());
            do {
                DecoratedDyck d;
                d.path = dyck;
                for (size_t i = 0; i < valleys.size(); ++i)
                    if (vmask[i]) d.marked.push_back(valleys[i]);
                for (size_t i = 0; i < falls.size(); ++i)
                    if (fmask[i]) d.stars.push_back(falls[i]);
                visit(d);
            } while (std::next_permutation(fmask.begin(), fmask.end()));
        } while (std::next_permutation(vmask.begin(), vmask.end()));
    };
    auto build = [&](auto&& self, int easts, int norths) -> void {
        if (easts == size && norths == size) {
            choose_and_emit(path);
            return;
        }
        if (norths < size) {
            path += 'N';
            self(self, easts, norths + 1);
            path.pop_back();
        }
        if (easts < norths && easts < size) {
            path += 'E';
            self(self, easts + 1, norths);
            path.pop_back();
        }
    };
    build(build, 0, 0);
}

std::map<Partition, QPoly, CanonicalPartitionLess> colored_parking_gf(int n, int k, int m) {
    std::map<Partition, QPoly, CanonicalPartitionLess> gf;
    for_each_colored_parking(n, k, m, [&](const ColoredParking& p) {
        gf[p.eta()] += QPoly::monomial(static_cast<int>(p.area()));
    });
    return gf;
}

std::map<Partition, QPoly, CanonicalPartitionLess> decorated_dyck_gf(int n, int k, int m) {
    std::map<Partition, QPoly, CanonicalPartitionLess> gf;
    for_each_decorated_dyck(n, k, m, [&](const DecoratedDyck& d) {
        gf[decorated_eta(d)] += QPoly::monomial(static_cast<int>(decorated_area(d)));
    });
    return gf;
}

} // namespace thetapark
