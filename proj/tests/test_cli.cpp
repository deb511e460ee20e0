// Exercises the command-line contract: output determinism, exit codes, and
// the documented formats.  Usage: test_cli <path-to-cli>

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run(const std::string& command) {
    CliResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void check(bool condition, const std::string& what) {
    if (!condition) {
        ++g_failures;
        std::cout << "FAIL: " << what << std::endl;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "usage: test_cli <path-to-cli>" << std::endl;
        return 1;
    }
    std::string cli = argv[1];

    // byte-identical reruns
    std::string expand_cmd = cli + " expand --kind e --lambda 2,1 --gamma 1 --format json";
    CliResult first = run(expand_cmd), second = run(expand_cmd);
    check(first.exit_code == 0 && first.output == second.output, "expand output is deterministic");

    CliResult text = run(cli + " expand --kind e --lambda 3 --gamma ''");
    check(text.exit_code == 0 && text.output == "e₃: 1\n", "expand text format");

    check(run(cli + " expand --kind e --lambda 1,2 --gamma ''").exit_code == 1,
          "ascending parts are rejected with exit 1");
    check(run(cli + " expand --kind x --lambda 1 --gamma ''").exit_code == 1,
          "unknown kind is rejected with exit 1");

    CliResult vacuous = run(cli + " verify --n-max 0 --m-max 0");
    check(vacuous.exit_code == 0, "verify --n-max 0 passes vacuously");

    CliResult members = run(cli + " enumerate --family pf --lambda 1,1 --gamma 2");
    int lines = 0;
    for (char c : members.output)
        if (c == '\n') ++lines;
    check(members.exit_code == 0 && lines == 10, "the ten (2)-parking functions of content (1,1)");

    CliResult tikz1 = run(cli + " enumerate --family pf --lambda 1,1 --gamma 2 --format tikz");
    CliResult tikz2 = run(cli + " enumerate --family pf --lambda 1,1 --gamma 2 --format tikz");
    check(tikz1.exit_code == 0 && tikz1.output == tikz2.output && !tikz1.output.empty(),
          "tikz rendering is deterministic");

    check(run("echo 'not json' | " + cli + " render -").exit_code == 1, "malformed object JSON exits 1");
    CliResult empty_render = run("echo '{\"P\":\"\",\"Q\":\"\"}' | " + cli + " render -");
    check(empty_render.exit_code == 0 &&
              empty_render.output == "\\begin{tikzpicture}[scale=1]\n\\end{tikzpicture}\n",
          "empty path renders an empty picture environment");
    check(run("echo '{\"P\":\"NE\",\"Q\":\"EN\"}' | " + cli + " render - --format svg").exit_code == 0,
          "render accepts the object schema");

    CliResult conj = run(cli + " conjecture --n-max 2 --m-max 1 --format json");
    check(conj.exit_code == 0 && conj.output.find("\"all_nonnegative\":true") != std::string::npos,
          "conjecture explorer reports nonnegative coefficients");

    if (g_failures == 0) std::cout << "cli contract: ok" << std::endl;
    return g_failures;
}
