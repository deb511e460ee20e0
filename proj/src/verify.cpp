#include "thetapark/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "thetapark/cct.hpp"
#include "thetapark/combinatorial.hpp"
#include "thetapark/extended_delta.hpp"
#include "thetapark/involution.hpp"
#include "thetapark/macdonald_qt.hpp"
#include "thetapark/macdonald_t1.hpp"
#include "thetapark/parallel.hpp"
#include "thetapark/phi.hpp"
#include "thetapark/qanalogs.hpp"
#include "thetapark/tableaux.hpp"

namespace thetapark {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

struct Collector {
    std::atomic<long> checks{0};
    std::mutex mutex;
    std::vector<std::string> failures;

    void pass(long count = 1) { checks += count; }
    void fail(const std::string& message) {
        std::lock_guard<std::mutex> lock(mutex);
        failures.push_back(message);
    }
    void check(bool condition, const std::string& message) {
        ++checks;
        if (!condition) fail(message);
    }
};

SuiteResult finish(const std::string& name, Collector& c, const Timer& timer) {
    SuiteResult out;
    out.name = name;
    out.checks = c.checks.load();
    out.failures = std::move(c.failures);
    std::sort(out.failures.begin(), out.failures.end()); // stable across thread counts
    out.seconds = timer.elapsed();
    return out;
}

std::string diff_expansions(const Partition& lambda, const Partition& gamma, const EExpansion& a,
                            const EExpansion& b) {
    for (const Partition& eta : partitions_of(a.degree())) {
        if (a.term(eta) == b.term(eta)) continue;
        std::ostringstream out;
        out << "lambda=" << lambda.str() << " gamma=" << gamma.str() << " eta=" << eta.str()
            << ": oracle " << a.term(eta).str() << " vs combinatorial " << b.term(eta).str();
        return out.str();
    }
    return "expansions differ in an unexpected way";
}

std::vector<std::pair<Partition, Partition>> type_jobs(int n_max, int m_max) {
    std::vector<std::pair<Partition, Partition>> jobs;
    for (int n = 1; n <= n_max; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= m_max; ++m)
                for (const Partition& gamma : partitions_of(m)) jobs.emplace_back(lambda, gamma);
    return jobs;
}

SuiteResult verify_theorem(char kind, const std::string& name, int n_max, int m_max, int threads) {
    Timer timer;
    Collector c;
    auto jobs = type_jobs(n_max, m_max);
    parallel_for(static_cast<int>(jobs.size()), threads, [&](int i) {
        const auto& [lambda, gamma] = jobs[static_cast<size_t>(i)];
        EExpansion oracle = xi_expand_t1(kind, lambda, gamma);
        EExpansion comb = combinatorial_expansion(kind, lambda, gamma);
        if (oracle == comb) c.pass();
        else c.fail(diff_expansions(lambda, gamma, oracle, comb));
    });
    return finish(name, c, timer);
}

// coefficient of m_gamma in h_m e_j: fillings of gamma's parts as g + b with
// g in {0,1}, sum g = j, sum b = m
Int h_e_monomial_coefficient(const Partition& gamma, int m, int j) {
    Int count = 0;
    const int ell = gamma.length();
    auto recurse = [&](auto&& self, int i, int g_left, int b_left) -> void {
        if (i == ell) {
            if (g_left == 0 && b_left == 0) ++count;
            return;
        }
        for (int g = 0; g <= 1 && g <= gamma.part(i) && g <= g_left; ++g) {
            int b = gamma.part(i) - g;
            if (b <= b_left) self(self, i + 1, g_left - g, b_left - b);
        }
    };
    recurse(recurse, 0, j, m);
    return count;
}

} // namespace

SuiteResult verify_theorem1(int n_max, int m_max, int threads) {
    return verify_theorem('e', "theorem1", n_max, m_max, threads);
}

SuiteResult verify_theorem2(int n_max, int m_max, int threads) {
    return verify_theorem('s', "theorem2", n_max, m_max, threads);
}

SuiteResult verify_xi_identity(int n_max) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= n_max; ++n) {
        for (char kind : {'e', 's'}) {
            Partition lambda = kind == 'e' ? Partition{n} : Partition(std::vector<int>(static_cast<size_t>(n), 1));
            EExpansion oracle = xi_expand_t1(kind, lambda, Partition{});
            EExpansion comb = combinatorial_expansion(kind, lambda, Partition{});
            bool expected = oracle.terms().size() == 1 && oracle.term(Partition{n}) == QPoly(1);
            c.check(expected && oracle == comb, "Xi e_" + std::to_string(n) + " != e_" + std::to_string(n));
        }
    }
    return finish("xi-identity", c, timer);
}

SuiteResult verify_involution(int n_max, int m_max, long weight_max) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& eta : partitions_of(n)) {
                for (int m = 0; m <= m_max; ++m) {
                    for (const Partition& gamma : partitions_of(m)) {
                        std::map<long, long> signed_sum, fixed_sum;
                        bool slice_ok = true;
                        std::string slice_error;
                        for_each_lc_sequence(lambda, eta, gamma, weight_max, [&](const LCSeq& t) {
                            auto [wt, sg] = lc_weight_sign(t);
                            LCSeq image = psi(t);
                            auto [wi, si] = lc_weight_sign(image);
                            bool fixed = is_psi_fixed(t);
                            bool ok = psi(image) == t && wi == wt &&
                                      valid_lcseq(image, lambda, eta, gamma) &&
                                      (fixed ? image == t : si == -sg);
                            if (!ok && slice_ok) {
                                slice_ok = false;
                                std::ostringstream out;
                                out << "involution failure at lambda=" << lambda.str() << " eta=" << eta.str()
                                    << " gamma=" << gamma.str() << " weight=" << wt;
                                slice_error = out.str();
                            }
                            signed_sum[wt] += sg;
                            if (fixed) fixed_sum[wt] += 1;
                        });
                        std::map<long, long> enumerated;
                        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) {
                            long wt = lc_weight_sign(t).first;
                            if (wt <= weight_max) enumerated[wt] += 1;
                        });
                        std::erase_if(signed_sum, [](const auto& kv) { return kv.second == 0; });
                        c.check(slice_ok, slice_error);
                        c.check(signed_sum == fixed_sum && fixed_sum == enumerated,
                                "signed slice sum differs from fixed points at lambda=" + lambda.str() +
                                    " eta=" + eta.str() + " gamma=" + gamma.str());
                    }
                }
            }
        }
    }
    return finish("involution", c, timer);
}

SuiteResult verify_bijection(int n_max, int m_max) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int m = 0; m <= m_max; ++m) {
                for (const Partition& gamma : partitions_of(m)) {
                    // phi: fixed points to ascent polyominoes, per eta
                    std::map<Partition, std::set<PathPair>, CanonicalPartitionLess> images;
                    std::map<Partition, long, CanonicalPartitionLess> fixed_counts;
                    bool ok = true;
                    for (const Partition& eta : partitions_of(n)) {
                        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) {
                            PathPair p = phi(t);
                            ok = ok && is_parallelogram_polyomino(p.top, p.bottom) &&
                                 eta_partition(p.top) == eta && area(p) == lc_weight_sign(t).first &&
                                 phi_inverse(p) == t;
                            images[eta].insert(p);
                            fixed_counts[eta] += 1;
                        });
                    }
                    std::map<Partition, long, CanonicalPartitionLess> pp_counts;
                    std::map<Partition, QPoly, CanonicalPartitionLess> pp_gf;
                    for_each_s_labeled_pp(SubsetStat::Asc, lambda.parts(), gamma, [&](const PathPair& p) {
                        pp_counts[eta_partition(p.top)] += 1;
                        pp_gf[eta_partition(p.top)] += QPoly::monomial(static_cast<int>(area(p)));
                    });
                    for (const auto& [eta, count] : fixed_counts)
                        ok = ok && static_cast<long>(images[eta].size()) == count && pp_counts[eta] == count;
                    long pp_total = 0, fixed_total = 0;
                    for (const auto& [eta, count] : pp_counts) pp_total += count;
                    for (const auto& [eta, count] : fixed_counts) fixed_total += count;
                    ok = ok && pp_total == fixed_total;
                    c.check(ok, "phi bijection failure at lambda=" + lambda.str() + " gamma=" + gamma.str());

                    // iota: parking functions to ascent polyominoes
                    std::map<Partition, QPoly, CanonicalPartitionLess> pf_gf;
                    bool iota_ok = true;
                    for_each_pf(gamma, lambda.parts(), [&](const PathPair& p) {
                        PathPair image = iota(p);
                        iota_ok = iota_ok && area(image) == area(p) && iota_inverse(image) == p &&
                                  eta_partition(image.top) == e_composition(p).sorted();
                        pf_gf[e_composition(p).sorted()] += QPoly::monomial(static_cast<int>(area(p)));
                    });
                    iota_ok = iota_ok && pf_gf == pp_gf;
                    c.check(iota_ok, "iota bijection failure at lambda=" + lambda.str() + " gamma=" + gamma.str());
                }
            }
        }
    }
    return finish("bijection", c, timer);
}

SuiteResult verify_specialization(int mu_max) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= mu_max; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            SymFunc direct = basis_convert(macdonald_t1(mu), Basis::m);
            SymFunc oracle = macdonald_t1_monomial_oracle(mu);
            c.check(direct == oracle, "macdonald t=1 differs from the word oracle at mu=" + mu.str());
            bool positive = true;
            for (const auto& [key, value] : direct.coeffs()) {
                QPoly p = value.as_polynomial();
                positive = positive && p.integer_coefficients() && p.nonnegative_coefficients();
            }
            c.check(positive, "macdonald t=1 monomial coefficients not in N[q] at mu=" + mu.str());
        }
        Composition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lambda : partitions_of(n)) {
            c.check(pair_s_t1(ones, lambda).at_one() == Rational(syt_count_hook(lambda)),
                    "pair_s at q=1 misses the tableau count at lambda=" + lambda.str());
            for (const Composition& beta : compositions_of(std::min(n, 5)))
                if (beta.size() == n)
                    c.check(pair_s_t1(beta, lambda) == pair_s_t1_lattice(beta, lambda),
                            "tableau and lattice routes disagree at lambda=" + lambda.str());
        }
    }
    return finish("specialization", c, timer);
}

SuiteResult verify_forgotten(int mu_max, int series_degree) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= mu_max; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            std::vector<Rational> counts(static_cast<size_t>(series_degree) + 1, Rational(0));
            for_each_cct(mu, series_degree, false,
                         [&](const CCT& t) { counts[static_cast<size_t>(t.size())] += 1; });
            QRat closed = forgotten_principal(mu);
            if ((n - mu.length()) % 2 != 0) closed = -closed;
            c.check(closed.series(series_degree) == counts,
                    "closed form disagrees with tableau enumeration at mu=" + mu.str());

            std::vector<Rational> restricted(static_cast<size_t>(series_degree) + 1, Rational(0));
            for_each_cct(mu, series_degree, true,
                         [&](const CCT& t) { restricted[static_cast<size_t>(t.size())] += 1; });
            QRat closed_bar = forgotten_principal_c1_zero(mu);
            if ((n - mu.length()) % 2 != 0) closed_bar = -closed_bar;
            c.check(closed_bar.series(series_degree) == restricted,
                    "restricted closed form disagrees at mu=" + mu.str());
            c.check(QRat(QPoly::one_minus_q_pow(n)) * forgotten_principal(mu) == forgotten_principal_c1_zero(mu),
                    "(1-q^n) bC != bC-bar at mu=" + mu.str());
        }
    }
    return finish("forgotten", c, timer);
}

SuiteResult verify_extended_delta(int n_max, int m_max, int threads) {
    Timer timer;
    Collector c;
    std::vector<std::array<int, 3>> jobs;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 0; m <= m_max; ++m)
            for (int k = 0; k <= n; ++k) jobs.push_back({n, k, m});
    parallel_for(static_cast<int>(jobs.size()), threads, [&](int idx) {
        auto [n, k, m] = jobs[static_cast<size_t>(idx)];
        std::map<Partition, QPoly, CanonicalPartitionLess> source;
        bool map_ok = true;
        for_each_colored_parking(n, k, m, [&](const ColoredParking& p) {
            DecoratedDyck d = extended_delta_map(p);
            map_ok = map_ok && static_cast<int>(d.marked.size()) == m &&
                     static_cast<int>(d.stars.size()) == k && decorated_area(d) == p.area() &&
                     decorated_eta(d) == p.eta();
            source[p.eta()] += QPoly::monomial(static_cast<int>(p.area()));
        });
        std::ostringstream tag;
        tag << "n=" << n << " k=" << k << " m=" << m;
        c.check(map_ok, "decoration map broke a statistic at " + tag.str());
        c.check(source == decorated_dyck_gf(n, k, m), "family generating functions differ at " + tag.str());

        // operator cross-check: sum over gamma of the h_m e_{n-k} monomial
        // coefficients times the oracle expansion
        std::map<Partition, QPoly, CanonicalPartitionLess> from_oracle;
        for (const Partition& gamma : partitions_of(m + (n - k))) {
            Int coeff = h_e_monomial_coefficient(gamma, m, n - k);
            if (coeff == 0) continue;
            EExpansion ex = xi_expand_t1('e', Partition{n}, gamma);
            for (const auto& [eta, poly] : ex.terms()) {
                QPoly scaled = poly;
                scaled.scale(Rational(coeff));
                from_oracle[eta] += scaled;
            }
        }
        std::erase_if(from_oracle, [](const auto& kv) { return kv.second.is_zero(); });
        c.check(source == from_oracle, "family differs from the operator expansion at " + tag.str());
    });
    return finish("extdelta", c, timer);
}

SuiteResult verify_two_car(int total_max) {
    Timer timer;
    Collector c;
    for (int n = 1; n <= total_max - 1; ++n) {
        for (int m = 1; m <= n && n + m <= total_max; ++m) {
            std::ostringstream tag;
            tag << "n=" << n << " m=" << m;
            c.check(two_car_area_gf(n, m) == polyomino_area_gf(m + 1, n + 1),
                    "two-label parking functions differ from polyominoes at " + tag.str());
        }
    }
    return finish("twocar", c, timer);
}

SuiteResult verify_labelings(int n_max, int m_max) {
    Timer timer;
    Collector c;
    for (const auto& [lambda, gamma] : type_jobs(n_max, m_max)) {
        c.check(s_labeled_expansion(SubsetStat::Asc, lambda, gamma) ==
                    s_labeled_expansion(SubsetStat::Des, lambda, gamma),
                "ascent and descent labelings differ at lambda=" + lambda.str() + " gamma=" + gamma.str());
    }
    return finish("labelings", c, timer);
}

SuiteResult verify_qalgebra(unsigned seed, int trials) {
    Timer timer;
    Collector c;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_poly = [&](bool nonzero) {
        QPoly p;
        int d = deg(rng);
        for (int e = 0; e <= d; ++e) p += QPoly::monomial(e, coeff(rng));
        if (nonzero && p.is_zero()) p = QPoly(1) + QPoly::monomial(1);
        return p;
    };
    for (int trial = 0; trial < trials; ++trial) {
        QRat a(random_poly(false), random_poly(true));
        QRat b(random_poly(false), random_poly(true));
        QRat d(random_poly(false), random_poly(true));
        bool ok = a + b == b + a && (a + b) + d == a + (b + d) && (a * b) * d == a * (b * d) &&
                  a * (b + d) == a * b + a * d && (a - a).is_zero();
        if (!b.is_zero()) ok = ok && (a / b) * b == a;
        c.check(ok, "field identity failed at trial " + std::to_string(trial));
    }
    return finish("qalgebra", c, timer);
}

SuiteResult verify_conjecture(int n_max, int m_max, int threads) {
    Timer timer;
    Collector c;
    auto jobs = type_jobs(n_max, m_max);
    parallel_for(static_cast<int>(jobs.size()), threads, [&](int i) {
        const auto& [lambda, gamma] = jobs[static_cast<size_t>(i)];
        std::ostringstream tag;
        tag << "lambda=" << lambda.str() << " gamma=" << gamma.str();
        SymFuncQT full = xi_full(lambda, gamma);
        bool polynomial = true;
        for (const auto& [eta, value] : full.coeffs()) polynomial = polynomial && value.is_polynomial();
        c.check(polynomial, "generic coefficients do not clear at " + tag.str());

        EExpansion t1 = xi_expand_t1('e', lambda, gamma);
        EExpansion comb = combinatorial_expansion('e', lambda, gamma);
        bool matches = t1 == comb;
        for (const Partition& eta : partitions_of(lambda.size()))
            matches = matches && full.coeff(eta).eval_t(QRat(1)) == QRat(t1.term(eta));
        c.check(matches, "t=1 specialization mismatch at " + tag.str());

        EPositivityReport report = epositivity_report(full, lambda, gamma);
        c.check(report.all_nonnegative, "negative coefficient found: " + report.counterexample);
    });
    return finish("conjecture", c, timer);
}

} // namespace thetapark
