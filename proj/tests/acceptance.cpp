// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [path-to-cli]

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "thetapark/json_io.hpp"
#include "thetapark/parallel.hpp"
#include "thetapark/verify.hpp"

using namespace thetapark;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& description, bool ok, double seconds, double limit,
            const std::string& detail = "") {
    bool in_time = limit <= 0 || seconds < limit;
    bool pass = ok && in_time;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << description;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " [" << seconds << "s";
    if (limit > 0) line << " / limit " << limit << "s";
    line << "]";
    if (!ok && !detail.empty()) line << " -- " << detail;
    if (ok && !in_time) line << " -- exceeded time limit";
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failures;
}

void report_suite(int number, const std::string& description, const SuiteResult& result, double limit) {
    report(number, description, result.ok(), result.seconds, limit,
           result.failures.empty() ? "" : result.failures.front());
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult result;
    std::string command = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

QPoly poly(std::initializer_list<int> ascending_coeffs) {
    std::vector<Rational> c;
    for (int x : ascending_coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}

void cli_expand_criterion(int number, const std::string& cli, const std::string& args,
                          const EExpansion& expected, const std::string& description) {
    auto start = Clock::now();
    CliResult result = run_cli(cli, args);
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::string detail;
    bool ok = result.exit_code == 0;
    if (!ok) {
        detail = "exit code " + std::to_string(result.exit_code);
    } else {
        try {
            EExpansion parsed = expansion_from_json(json::parse(result.output));
            ok = parsed == expected;
            if (!ok) detail = "expansion differs from the published values";
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    report(number, description, ok, seconds, 1.0, detail);
}

} // namespace

int main(int argc, char** argv) {
    int threads = default_thread_count();
    std::string cli = argc > 1 ? argv[1] : "";

    if (!cli.empty()) {
        EExpansion c1(2);
        c1.add_term(Partition{2}, poly({1, 1, 1, 1}));
        c1.add_term(Partition{1, 1}, poly({3, 2, 1}));
        cli_expand_criterion(1, cli, "expand --kind e --lambda 1,1 --gamma 2 --pipeline both --format json",
                             c1, "expand e lambda=(1,1) gamma=(2) matches both pipelines");

        EExpansion c2(3);
        c2.add_term(Partition{1, 1, 1}, poly({2, 1}));
        c2.add_term(Partition{2, 1}, poly({4, 6, 4, 1}));
        c2.add_term(Partition{3}, poly({0, 1, 2, 2, 1}));
        cli_expand_criterion(2, cli, "expand --kind s --lambda 2,1 --gamma 1 --pipeline both --format json",
                             c2, "expand s lambda=(2,1) gamma=(1) matches the three-term expansion");
    } else {
        report(1, "expand e lambda=(1,1) gamma=(2)", false, 0, 1.0, "no CLI path supplied");
        report(2, "expand s lambda=(2,1) gamma=(1)", false, 0, 1.0, "no CLI path supplied");
    }

    report_suite(3, "theorem 1 equality for n <= 5, m <= 3", verify_theorem1(5, 3, threads), 600.0);
    report_suite(4, "theorem 2 equality for n <= 4, m <= 2", verify_theorem2(4, 2, threads), 600.0);
    report_suite(5, "Xi e_n = e_n for n <= 7, both pipelines", verify_xi_identity(7), 60.0);
    report_suite(6, "involution suite on the weight<=6 slice, n <= 3, m <= 2", verify_involution(3, 2, 6),
                 300.0);
    report_suite(7, "bijection suite for phi and iota, n <= 4, m <= 2", verify_bijection(4, 2), 300.0);
    report_suite(8, "Macdonald t=1 and Schur pairing sanity, |mu| <= 6", verify_specialization(6), 0);
    report_suite(9, "forgotten principal evaluation, |mu| <= 5, degree 12", verify_forgotten(5, 12), 0);
    report_suite(10, "extended Delta cross-check, n <= 5, m <= 2, k <= n",
                 verify_extended_delta(5, 2, threads), 300.0);
    report_suite(11, "two-label parking functions vs polyominoes, n+m <= 7", verify_two_car(7), 0);
    report_suite(12, "generic (q,t) explorer, n <= 4, m <= 2", verify_conjecture(4, 2, threads), 1800.0);

    std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures;
}
