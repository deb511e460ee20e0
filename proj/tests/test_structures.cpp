#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "thetapark/cct.hpp"
#include "thetapark/combinatorial.hpp"
#include "thetapark/extended_delta.hpp"
#include "thetapark/involution.hpp"
#include "thetapark/macdonald_t1.hpp"
#include "thetapark/paths.hpp"
#include "thetapark/phi.hpp"
#include "thetapark/qanalogs.hpp"

using namespace thetapark;

namespace {

// the fully worked labeled sequence with weight 40
LCSeq worked_example() {
    LCSeq seq;
    seq.items.push_back(LabeledCCT{CCT{Composition{1, 2}, {0, 1, 1}}, {2, 1, 2}, {0, 2, 0}});
    seq.items.push_back(LabeledCCT{CCT{Composition{1}, {1}}, {4}, {1}});
    seq.items.push_back(LabeledCCT{CCT{Composition{1, 3, 1}, {1, 2, 2, 2, 2}}, {3, 4, 1, 3, 1}, {2, 0, 4, 3, 0}});
    return seq;
}

// the fixed point drawn with rows (3),(1),(4),(1)
LCSeq fixed_point_example() {
    LCSeq seq;
    seq.items.push_back(LabeledCCT{CCT{Composition{3}, {0, 0, 0}}, {2, 4, 3}, {0, 2, 0}});
    seq.items.push_back(LabeledCCT{CCT{Composition{1}, {2}}, {1}, {2}});
    seq.items.push_back(LabeledCCT{CCT{Composition{4}, {0, 0, 0, 0}}, {3, 1, 1, 2}, {2, 1, 1, 0}});
    seq.items.push_back(LabeledCCT{CCT{Composition{1}, {2}}, {2}, {3}});
    return seq;
}

std::map<Partition, QPoly, CanonicalPartitionLess> expansion_map(const EExpansion& e) {
    return {e.terms().begin(), e.terms().end()};
}

} // namespace

TEST_CASE("column-composition tableaux") {
    CCT good{Composition{2, 1}, {0, 0, 2}};
    CHECK(good.valid());
    CHECK(good.size() == 2);
    CHECK(good.type() == Partition{2, 1});
    CHECK_FALSE(CCT{Composition{2, 1}, {0, 1, 1}}.valid()); // steps inside a block
    CHECK_FALSE(CCT{Composition{2, 1}, {1, 1, 0}}.valid()); // not increasing

    size_t singles = 0;
    for_each_cct(Partition{1}, 3, false, [&](const CCT& c) {
        CHECK(c.valid());
        ++singles;
    });
    CHECK(singles == 4); // c in {0,1,2,3}

    // generating function by size matches the closed form through degree 12
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            const int deg = 12;
            std::vector<Rational> counts(deg + 1, Rational(0));
            for_each_cct(mu, deg, false, [&](const CCT& c) { counts[static_cast<size_t>(c.size())] += 1; });
            QRat closed = forgotten_principal(mu);
            if ((mu.size() - mu.length()) % 2 != 0) closed = -closed;
            CHECK(closed.series(deg) == counts);

            std::vector<Rational> restricted(deg + 1, Rational(0));
            for_each_cct(mu, deg, true, [&](const CCT& c) { restricted[static_cast<size_t>(c.size())] += 1; });
            QRat closed_bar = forgotten_principal_c1_zero(mu);
            if ((mu.size() - mu.length()) % 2 != 0) closed_bar = -closed_bar;
            CHECK(closed_bar.series(deg) == restricted);
        }
    }
}

TEST_CASE("weight and sign of the worked example") {
    LCSeq seq = worked_example();
    CHECK(valid_lcseq(seq, Partition{3, 2, 2, 2}, Partition{3, 2, 1, 1, 1, 1}, Partition{4, 3, 2, 2, 1}));
    auto [w, s] = lc_weight_sign(seq);
    CHECK(w == 40);
    CHECK(s == -1);
    CHECK(lc_weight_sign(LCSeq{}) == std::pair<long, int>(0, 1));

    // weight is additive over the items
    long per_item = 0;
    for (const LabeledCCT& t : seq.items) per_item += weight(t);
    CHECK(per_item == 40);
}

TEST_CASE("split and join") {
    LabeledCCT s{CCT{Composition{3, 1, 1}, {1, 1, 1, 1, 2}}, {7, 4, 7, 7, 5}, {0, 0, 2, 0, 3}};
    auto pieces = try_split(s);
    REQUIRE(pieces.has_value());
    CHECK(pieces->first == LabeledCCT{CCT{Composition{3}, {1, 1, 1}}, {7, 4, 7}, {0, 0, 2}});
    CHECK(pieces->second == LabeledCCT{CCT{Composition{1, 1}, {4, 5}}, {7, 5}, {0, 3}});
    auto joined = try_join(pieces->first, pieces->second);
    REQUIRE(joined.has_value());
    CHECK(*joined == s);
    CHECK(weight(pieces->first) + weight(pieces->second) == weight(s));

    CHECK_FALSE(try_split(LabeledCCT{CCT{Composition{2}, {1, 1}}, {1, 1}, {0, 0}}).has_value());

    // join(split(S)) = S for every splittable S with small data
    for (const Composition& alpha :
         {Composition{1, 1}, Composition{2, 1}, Composition{1, 2}, Composition{2, 2}, Composition{1, 1, 1}}) {
        const int len = alpha.size();
        std::vector<int> c(static_cast<size_t>(len), 0);
        auto heights = [&](auto&& self, int i) -> void {
            if (i == len) {
                CCT cct{alpha, c};
                if (!cct.valid()) return;
                Word w(static_cast<size_t>(len), 1), l(static_cast<size_t>(len), 0);
                auto words = [&](auto&& wself, int j) -> void {
                    if (j == len) {
                        LabeledCCT t{cct, w, l};
                        auto sp = try_split(t);
                        REQUIRE(sp.has_value());
                        auto back = try_join(sp->first, sp->second);
                        REQUIRE(back.has_value());
                        CHECK(*back == t);
                        CHECK(weight(sp->first) + weight(sp->second) == weight(t));
                        return;
                    }
                    for (int x = 1; x <= 3; ++x)
                        for (int y = 0; y <= 2; ++y) {
                            w[static_cast<size_t>(j)] = x;
                            l[static_cast<size_t>(j)] = y;
                            wself(wself, j + 1);
                        }
                };
                words(words, 0);
                return;
            }
            for (int v = (i == 0 ? 0 : c[static_cast<size_t>(i - 1)]); v <= 3; ++v) {
                c[static_cast<size_t>(i)] = v;
                self(self, i + 1);
            }
        };
        heights(heights, 0);
    }
}

TEST_CASE("psi is a weight-preserving sign-reversing involution") {
    CHECK(psi(LCSeq{}) == LCSeq{});
    LCSeq fp = fixed_point_example();
    CHECK(is_psi_fixed(fp));
    CHECK(psi(fp) == fp);
    CHECK(valid_lcseq(fp, Partition{3, 3, 2, 1}, Partition{4, 3, 1, 1}, Partition{3, 2, 2, 2, 1, 1}));

    const long W = 5;
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& eta : partitions_of(n)) {
                for (int m = 0; m <= 1; ++m) {
                    for (const Partition& gamma : partitions_of(m)) {
                        std::map<long, Rational> signed_sum, fixed_sum;
                        for_each_lc_sequence(lambda, eta, gamma, W, [&](const LCSeq& t) {
                            CHECK(valid_lcseq(t, lambda, eta, gamma));
                            auto [wt, sg] = lc_weight_sign(t);
                            LCSeq image = psi(t);
                            CHECK(psi(image) == t);
                            auto [wi, si] = lc_weight_sign(image);
                            CHECK(wi == wt);
                            if (is_psi_fixed(t)) {
                                CHECK(image == t);
                                fixed_sum[wt] += 1;
                            } else {
                                CHECK(si == -sg);
                            }
                            signed_sum[wt] += sg;
                        });
                        std::map<long, Rational> enumerated;
                        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) {
                            CHECK(is_psi_fixed(t));
                            auto [wt, sg] = lc_weight_sign(t);
                            CHECK(sg == 1);
                            if (wt <= W) enumerated[wt] += 1;
                        });
                        std::erase_if(signed_sum, [](const auto& kv) { return kv.second == 0; });
                        CHECK(signed_sum == fixed_sum);
                        CHECK(fixed_sum == enumerated);
                    }
                }
            }
        }
    }
}

TEST_CASE("fixed points carry the expansion coefficients") {
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= 1; ++m) {
                for (const Partition& gamma : partitions_of(m)) {
                    EExpansion expected = xi_expand_t1('e', lambda, gamma);
                    EExpansion from_fixed(n);
                    for (const Partition& eta : partitions_of(n)) {
                        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) {
                            from_fixed.add_term(eta, QPoly::monomial(static_cast<int>(lc_weight_sign(t).first)));
                        });
                    }
                    CHECK(from_fixed == expected);
                }
            }
        }
    }
}

TEST_CASE("path basics and figures") {
    // the opening polyomino with area 20
    std::string top20 = "NNNEENNEEEEENNEEEEEENEE";
    std::string bottom20 = "EEEENNENEEEENEENNEEENEN";
    CHECK(is_parallelogram_polyomino(top20, bottom20));
    CHECK(polyomino_area(top20, bottom20) == 20);

    // the e-composition figure: eta(p) = (4,2,1)
    PathPair ecomp{"NNNENEENNEENEEEEEEEE", "EEENENEEENEENENEENEN", {1, 4, 5, 3, 1, 2, 5}};
    CHECK(is_parallelogram_polyomino(ecomp.top, ecomp.bottom));
    CHECK(is_gamma_dyck(ecomp, Partition{2, 1, 1, 1}));
    CHECK(e_composition(ecomp) == Composition{4, 2, 1});

    // single column forces eta = (n)
    PathPair single{"NNNE", "ENNN"};
    single.labels = {1, 2, 3};
    CHECK(e_composition(single) == Composition{3});
    CHECK(area(single) == 0);
}

TEST_CASE("iota on the labeled figure") {
    PathPair p{"NNNENEENNEENENEEE", "EENENENENENENENEN", {2, 4, 7, 5, 1, 3, 8, 6}};
    CHECK(is_parallelogram_polyomino(p.top, p.bottom));
    CHECK(is_gamma_dyck(p, Partition{}));
    CHECK(area(p) == 10);

    PathPair image = iota(p);
    CHECK(image.top == "NNNNENNEENNEE");
    CHECK(image.bottom == "EENENNNENENNN");
    CHECK(image.labels == p.labels);
    CHECK(area(image) == 10);
    CHECK(iota_inverse(image) == p);

    // strictly increasing labels remove nothing except the top row
    PathPair rising{"NENENEE", "EENENEN", {1, 2, 3}};
    PathPair out = iota(rising);
    CHECK(out.labels == rising.labels);
    CHECK(area(out) == area(rising));
}

TEST_CASE("parking function enumerations") {
    size_t count = 0;
    for_each_pf(Partition{2}, {1, 1}, [&](const PathPair& p) {
        CHECK(is_gamma_dyck(p, Partition{2}));
        ++count;
    });
    CHECK(count == 10);

    // classical parking functions: (n+1)^{n-1}
    for (int n = 1; n <= 4; ++n) {
        size_t pf = 0;
        std::vector<int> ones(static_cast<size_t>(n), 1);
        for_each_pf(Partition{}, ones, [&](const PathPair&) { ++pf; });
        size_t expected = 1;
        for (int i = 0; i < n - 1; ++i) expected *= static_cast<size_t>(n) + 1;
        CHECK(pf == expected);
    }
}

TEST_CASE("phi maps the fixed point to the pictured polyomino") {
    LCSeq fp = fixed_point_example();
    PathPair image = phi(fp);
    CHECK(image.top == "NNNENEEEEENNNNEEENEEEEEE");
    CHECK(image.bottom == "EENEENNEEENEENENEENNEEEN");
    CHECK(image.labels == Word{2, 4, 3, 1, 3, 1, 1, 2, 2});
    CHECK(is_parallelogram_polyomino(image.top, image.bottom));
    CHECK(area(image) == lc_weight_sign(fp).first);
    CHECK(area(image) == 18);
    LCSeq back = phi_inverse(image);
    CHECK(back == fp);
}

TEST_CASE("phi is a statistic-preserving bijection on small types") {
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& eta : partitions_of(n)) {
                for (int m = 0; m <= 1; ++m) {
                    for (const Partition& gamma : partitions_of(m)) {
                        std::set<PathPair> images;
                        size_t fixed_count = 0;
                        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) {
                            ++fixed_count;
                            PathPair p = phi(t);
                            CHECK(is_parallelogram_polyomino(p.top, p.bottom));
                            CHECK(eta_partition(p.top) == eta);
                            CHECK(area(p) == lc_weight_sign(t).first);
                            CHECK(phi_inverse(p) == t);
                            images.insert(p);
                        });
                        CHECK(images.size() == fixed_count); // injective
                        size_t pp_count = 0;
                        for_each_s_labeled_pp(SubsetStat::Asc, lambda.parts(), gamma, [&](const PathPair& p) {
                            if (eta_partition(p.top) == eta) ++pp_count;
                        });
                        CHECK(pp_count == fixed_count); // surjective by cardinality
                    }
                }
            }
        }
    }
}

TEST_CASE("iota is an area-preserving bijection on small types") {
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= 1; ++m) {
                for (const Partition& gamma : partitions_of(m)) {
                    std::map<Partition, QPoly, CanonicalPartitionLess> pf_gf, pp_gf;
                    size_t pf_count = 0, pp_count = 0;
                    for_each_pf(gamma, lambda.parts(), [&](const PathPair& p) {
                        ++pf_count;
                        PathPair image = iota(p);
                        CHECK(area(image) == area(p));
                        CHECK(iota_inverse(image) == p);
                        CHECK(eta_partition(image.top) == e_composition(p).sorted());
                        pf_gf[e_composition(p).sorted()] += QPoly::monomial(static_cast<int>(area(p)));
                    });
                    for_each_s_labeled_pp(SubsetStat::Asc, lambda.parts(), gamma, [&](const PathPair& p) {
                        ++pp_count;
                        pp_gf[eta_partition(p.top)] += QPoly::monomial(static_cast<int>(area(p)));
                    });
                    CHECK(pf_count == pp_count);
                    CHECK(pf_gf == pp_gf);
                }
            }
        }
    }
}

TEST_CASE("combinatorial expansions match the oracle") {
    EExpansion comb = combinatorial_expansion('e', Partition{1, 1}, Partition{2});
    CHECK(comb == xi_expand_t1('e', Partition{1, 1}, Partition{2}));
    EExpansion comb_s = combinatorial_expansion('s', Partition{2, 1}, Partition{1});
    CHECK(comb_s == xi_expand_t1('s', Partition{2, 1}, Partition{1}));

    for (int n = 1; n <= 3; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= 2; ++m)
                for (const Partition& gamma : partitions_of(m)) {
                    CHECK(combinatorial_expansion('e', lambda, gamma) == xi_expand_t1('e', lambda, gamma));
                    CHECK(combinatorial_expansion('s', lambda, gamma) == xi_expand_t1('s', lambda, gamma));
                }
}

TEST_CASE("ascent and descent labelings give the same expansion") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= 1; ++m)
                for (const Partition& gamma : partitions_of(m))
                    CHECK(expansion_map(s_labeled_expansion(SubsetStat::Asc, lambda, gamma)) ==
                          expansion_map(s_labeled_expansion(SubsetStat::Des, lambda, gamma)));
}

TEST_CASE("two-car families") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= n && n + m <= 5; ++m)
            CHECK(two_car_area_gf(n, m) == polyomino_area_gf(m + 1, n + 1));
}

TEST_CASE("extended delta worked instance") {
    ColoredBottom cb{7, {1, 3, 5}, {3, 3, 6}};
    CHECK(cb.path() == "EENNEEENNENENN");
    ColoredParking source{cb, "NNNNEENNEENEEE"};
    CHECK(source.area() == 13);
    CHECK(source.eta() == Partition{4, 2, 1});

    DecoratedDyck image = extended_delta_map(source);
    CHECK(image.path == "NNNNEEENNNENENEENEEE");
    CHECK(image.marked == std::vector<int>{7, 11, 16});
    CHECK(image.stars == std::vector<int>{5, 14, 17, 19});
    CHECK(decorated_area(image) == 13);
    CHECK(decorated_eta(image) == Partition{4, 2, 1});
}

TEST_CASE("extended delta families agree on small sizes") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 1; ++m) {
            for (int k = 0; k <= n; ++k) {
                // the map preserves area and e-composition object by object
                for_each_colored_parking(n, k, m, [&](const ColoredParking& p) {
                    DecoratedDyck d = extended_delta_map(p);
                    CHECK(static_cast<int>(d.marked.size()) == m);
                    CHECK(static_cast<int>(d.stars.size()) == k);
                    CHECK(decorated_area(d) == p.area());
                    CHECK(decorated_eta(d) == p.eta());
                });
                CHECK(colored_parking_gf(n, k, m) == decorated_dyck_gf(n, k, m));
            }
        }
    }
}
