// Command-line front end: expansions, enumerations, verification suites,
// conjecture reports, and figure rendering.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thetapark/combinatorial.hpp"
#include "thetapark/involution.hpp"
#include "thetapark/json_io.hpp"
#include "thetapark/macdonald_qt.hpp"
#include "thetapark/macdonald_t1.hpp"
#include "thetapark/parallel.hpp"
#include "thetapark/phi.hpp"
#include "thetapark/render.hpp"
#include "thetapark/verify.hpp"

using namespace thetapark;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitPipelineMismatch = 2;
constexpr int kExitNegativeCoefficient = 4;

std::string subscript(const Partition& eta) {
    static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                     "₅", "₆", "₇", "₈", "₉"};
    bool small = !eta.empty();
    for (int p : eta.parts()) small = small && p <= 9;
    if (!small) return eta.str();
    std::string out;
    for (int p : eta.parts()) out += digits[p];
    return out;
}

void print_expansion_text(std::ostream& out, const EExpansion& e) {
    if (e.terms().empty()) {
        out << "0\n";
        return;
    }
    for (const auto& [eta, poly] : e.terms()) out << 'e' << subscript(eta) << ": " << poly.str() << '\n';
}

int run_expand(const std::string& kind, const std::string& lambda_csv, const std::string& gamma_csv,
               const std::string& pipeline, const std::string& format) {
    Partition lambda = parse_partition(lambda_csv);
    Partition gamma = parse_partition(gamma_csv);
    if (lambda.empty()) throw CLI::ValidationError("--lambda must be a nonempty partition");
    char k = kind.at(0);

    std::optional<EExpansion> oracle, comb;
    if (pipeline == "oracle" || pipeline == "both") oracle = xi_expand_t1(k, lambda, gamma);
    if (pipeline == "combinatorial" || pipeline == "both") comb = combinatorial_expansion(k, lambda, gamma);
    if (oracle && comb && !(*oracle == *comb)) {
        for (const Partition& eta : partitions_of(lambda.size())) {
            if (oracle->term(eta) == comb->term(eta)) continue;
            std::cerr << "pipeline disagreement at lambda=" << lambda.str() << " gamma=" << gamma.str()
                      << " eta=" << eta.str() << ": oracle " << oracle->term(eta).str() << " vs combinatorial "
                      << comb->term(eta).str() << '\n';
            break;
        }
        return kExitPipelineMismatch;
    }
    const EExpansion& result = oracle ? *oracle : *comb;
    if (format == "json") {
        json out = expansion_to_json(result);
        out["lambda"] = lambda.parts();
        out["gamma"] = gamma.parts();
        out["kind"] = std::string(1, k);
        out["pipeline"] = pipeline;
        std::cout << out.dump() << '\n';
    } else {
        print_expansion_text(std::cout, result);
    }
    return kExitOk;
}

int run_enumerate(const std::string& family, const std::string& lambda_csv, const std::string& gamma_csv,
                  const std::string& eta_csv, const std::string& format) {
    Partition gamma = parse_partition(gamma_csv);
    auto emit = [&](const PathPair& p) {
        if (format == "tikz") std::cout << render_tikz(p);
        else if (format == "svg") std::cout << render_svg(p);
        else std::cout << path_pair_to_json(p).dump() << '\n';
    };
    if (family == "pf" || family == "lpf") {
        Partition lambda = parse_partition(lambda_csv);
        if (lambda.empty()) throw CLI::ValidationError("--lambda must be a nonempty partition");
        if (family == "pf") for_each_pf(gamma, lambda.parts(), emit);
        else for_each_lpf(gamma, lambda, emit);
    } else if (family == "pp") {
        Partition lambda = parse_partition(lambda_csv);
        if (lambda.empty()) throw CLI::ValidationError("--lambda must be a nonempty partition");
        for_each_s_labeled_pp(SubsetStat::Asc, lambda.parts(), gamma, emit);
    } else if (family == "fixed") {
        Partition lambda = parse_partition(lambda_csv);
        Partition eta = parse_partition(eta_csv);
        if (lambda.empty() || eta.empty())
            throw CLI::ValidationError("--lambda and --eta must be nonempty partitions");
        for_each_fixed_point(lambda, eta, gamma, [&](const LCSeq& t) { emit(phi(t)); });
    } else {
        throw CLI::ValidationError("unknown family " + family);
    }
    return kExitOk;
}

int run_verify(std::vector<std::string> suites, int n_max, int m_max, long weight_max,
               int threads, unsigned seed, bool timings) {
    if (suites.empty())
        suites = {"theorem1", "theorem2", "xi-identity", "involution", "bijection", "specialization",
                  "forgotten", "extdelta", "twocar", "labelings", "qalgebra"};
    int failed = 0;
    for (const std::string& suite : suites) {
        SuiteResult result;
        if (suite == "theorem1") result = verify_theorem1(n_max, m_max, threads);
        else if (suite == "theorem2") result = verify_theorem2(std::min(n_max, 4), std::min(m_max, 2), threads);
        else if (suite == "xi-identity") result = verify_xi_identity(n_max);
        else if (suite == "involution") result = verify_involution(std::min(n_max, 3), std::min(m_max, 2), weight_max);
        else if (suite == "bijection") result = verify_bijection(std::min(n_max, 4), std::min(m_max, 2));
        else if (suite == "specialization") result = verify_specialization(std::min(n_max, 6));
        else if (suite == "forgotten") result = verify_forgotten(std::min(n_max, 5), 12);
        else if (suite == "extdelta") result = verify_extended_delta(std::min(n_max, 5), std::min(m_max, 2), threads);
        else if (suite == "twocar") result = verify_two_car(std::min(7, 2 * n_max));
        else if (suite == "labelings") result = verify_labelings(std::min(n_max, 4), std::min(m_max, 2));
        else if (suite == "qalgebra") result = verify_qalgebra(seed, 1000);
        else if (suite == "conjecture") result = verify_conjecture(std::min(n_max, 4), std::min(m_max, 2), threads);
        else throw CLI::ValidationError("unknown suite " + suite);

        std::cout << "suite " << result.name << ": " << (result.ok() ? "ok" : "FAILED") << " ("
                  << result.checks << " checks";
        if (timings) std::cout << ", " << result.seconds << "s";
        std::cout << ")\n";
        for (const std::string& failure : result.failures) std::cout << "  " << failure << '\n';
        if (!result.ok()) ++failed;
    }
    return std::min(failed, 100);
}

int run_conjecture(int n_max, int m_max, const std::string& format, int threads) {
    std::vector<std::pair<Partition, Partition>> jobs;
    for (int n = 1; n <= n_max; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 0; m <= m_max; ++m)
                for (const Partition& gamma : partitions_of(m)) jobs.emplace_back(lambda, gamma);
    std::vector<EPositivityReport> reports(jobs.size());
    parallel_for(static_cast<int>(jobs.size()), threads, [&](int i) {
        reports[static_cast<size_t>(i)] = epositivity_check(jobs[static_cast<size_t>(i)].first,
                                                            jobs[static_cast<size_t>(i)].second);
    });
    bool all_ok = true;
    for (const EPositivityReport& report : reports) {
        if (format == "json") {
            std::cout << epositivity_to_json(report).dump() << '\n';
        } else {
            std::cout << "lambda=" << report.lambda.str() << " gamma=" << report.gamma.str() << ": "
                      << (report.all_nonnegative ? "nonnegative" : "NEGATIVE") << '\n';
        }
        if (!report.all_nonnegative) {
            all_ok = false;
            std::cerr << "negative coefficient: " << report.counterexample << '\n';
            break;
        }
    }
    return all_ok ? kExitOk : kExitNegativeCoefficient;
}

int run_render(const std::string& input, const std::string& format) {
    json object;
    if (input == "-") {
        std::cin >> object;
    } else {
        std::ifstream file(input);
        if (!file) throw CLI::ValidationError("cannot open " + input);
        file >> object;
    }
    PathPair p = path_pair_from_json(object);
    std::cout << (format == "svg" ? render_svg(p) : render_tikz(p));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansions over parking functions and their verification suites"};
    app.require_subcommand(1);

    std::string kind = "e", lambda_csv, gamma_csv, eta_csv, pipeline = "both", format = "text";
    int n_max = 4, m_max = 2, threads = default_thread_count();
    long weight_max = 6;
    unsigned seed = 20240817;
    bool timings = false;
    std::vector<std::string> suites;
    std::string render_input = "-";

    CLI::App* expand = app.add_subcommand("expand", "expansion of Delta_{m_gamma} Xi e_lambda or s_lambda at t=1");
    expand->add_option("--kind", kind, "e or s")->check(CLI::IsMember({"e", "s"}));
    expand->add_option("--lambda", lambda_csv, "partition, comma separated descending")->required();
    expand->add_option("--gamma", gamma_csv, "partition, empty for the empty partition");
    expand->add_option("--pipeline", pipeline, "oracle, combinatorial, or both")
        ->check(CLI::IsMember({"oracle", "combinatorial", "both"}));
    expand->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list family members as JSON lines or pictures");
    std::string family = "pf";
    enumerate->add_option("--family", family, "pf, lpf, pp, or fixed")
        ->check(CLI::IsMember({"pf", "lpf", "pp", "fixed"}));
    enumerate->add_option("--lambda", lambda_csv, "content partition");
    enumerate->add_option("--gamma", gamma_csv, "gamma partition");
    enumerate->add_option("--eta", eta_csv, "e-composition selector for fixed points");
    enumerate->add_option("--format", format, "json, tikz, or svg")
        ->check(CLI::IsMember({"json", "text", "tikz", "svg"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites; exit code counts failed suites");
    verify->add_option("suites", suites, "suite names (default: all)");
    verify->add_option("--n-max", n_max, "size bound for lambda");
    verify->add_option("--m-max", m_max, "size bound for gamma");
    verify->add_option("--weight-max", weight_max, "weight bound for the involution slice");
    verify->add_option("--threads,-j", threads, "worker threads (THETA_PARK_THREADS)");
    verify->add_option("--seed", seed, "seed for randomized property tests");
    verify->add_flag("--timings", timings, "print per-suite wall times");

    CLI::App* conjecture = app.add_subcommand("conjecture", "e-positivity explorer after q -> 1+u");
    conjecture->add_option("--n-max", n_max, "size bound for lambda");
    conjecture->add_option("--m-max", m_max, "size bound for gamma");
    conjecture->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    conjecture->add_option("--threads,-j", threads, "worker threads");

    CLI::App* render = app.add_subcommand("render", "draw an object from its JSON form");
    render->add_option("input", render_input, "file path or - for stdin");
    render->add_option("--format", format, "tikz or svg")->check(CLI::IsMember({"tikz", "svg"}));

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return run_expand(kind, lambda_csv, gamma_csv, pipeline, format);
        if (enumerate->parsed()) return run_enumerate(family, lambda_csv, gamma_csv, eta_csv, format);
        if (verify->parsed()) return run_verify(suites, n_max, m_max, weight_max, threads, seed, timings);
        if (conjecture->parsed()) return run_conjecture(std::min(n_max, 4), std::min(m_max, 2), format, threads);
        if (render->parsed()) return run_render(render_input, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
