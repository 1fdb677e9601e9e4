// End-to-end tests that drive the installed binary through a shell, pinning
// the user-visible output against golden transcripts.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs a full shell command, capturing stdout; stderr is discarded.
RunResult run_shell(const std::string& command) {
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

RunResult run_cli(const std::string& args) {
    return run_shell(std::string(ITERODE_CLI_PATH) + " " + args);
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(ITERODE_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream sink;
    sink << in.rdbuf();
    return sink.str();
}

} // namespace

TEST_CASE("pinned transcripts are reproduced byte for byte") {
    const auto generate = run_cli("generate --order 3 --r \"1\" --s \"x\"");
    CHECK(generate.exit_code == 0);
    CHECK(generate.output == read_golden("generate_order3.txt"));

    const auto closed = run_cli("coeffs --order 2 --j 1 --form closed");
    CHECK(closed.exit_code == 0);
    CHECK(closed.output == read_golden("coeffs_closed_n2_j1.txt"));

    const auto check = run_cli("check --coeffs \"x^3+3x; 3+3x^2; 3x\"");
    CHECK(check.exit_code == 0);
    CHECK(check.output == read_golden("check_iterative_order3.txt"));

    const auto generate_json = run_cli("generate --order 3 --r \"1\" --s \"x\" --json");
    CHECK(generate_json.exit_code == 0);
    CHECK(generate_json.output == read_golden("generate_order3.json"));
}

TEST_CASE("check distinguishes iterativity through its exit code") {
    const auto iterative = run_cli("check --coeffs \"x^3+3x; 3+3x^2; 3x\"");
    CHECK(iterative.exit_code == 0);

    const auto bent = run_cli("check --coeffs \"x; 0; 0\"");
    CHECK(bent.exit_code == 3);
    CHECK(bent.output.find("verdict: not iterative") != std::string::npos);
    CHECK(bent.output.find("54*x") != std::string::npos);

    const auto bent_json = run_cli("check --coeffs \"x; 0; 0\" --json");
    CHECK(bent_json.exit_code == 3);
    CHECK(bent_json.output == read_golden("check_noniterative.json"));
}

TEST_CASE("malformed invocations exit with code one and print nothing to stdout") {
    const std::array<std::string, 6> bad = {
        "check --coeffs \"x +; 0; 0\"",           // syntax error inside an entry
        "check --coeffs \"1; 2\"",                // wrong coefficient count
        "generate --order 0 --r 1 --s x",         // order below the valid range
        "generate --order 13 --r 1 --s x",        // order above the default cap
        "generate --order 2 --r 0 --s x",         // degenerate source equation
        "coeffs --order 3 --form typo",           // unknown form name
    };
    for (const auto& args : bad) {
        INFO(args);
        const auto result = run_cli(args);
        CHECK(result.exit_code == 1);
        CHECK(result.output.empty());
    }
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("generated equations always pass check through a pipe") {
    const std::string cli = ITERODE_CLI_PATH;
    const std::array<std::string, 4> sources = {
        "--order 3 --r \"1\" --s \"x\"",
        "--order 3 --r \"x\" --s \"x^2+1\"",
        "--order 4 --r \"x+1\" --s \"1\"",
        "--order 4 --r \"x^2\" --s \"x/2\"",
    };
    for (const auto& source : sources) {
        INFO(source);
        const auto piped =
            run_shell(cli + " generate " + source + " --list | " + cli + " check --coeffs -");
        CHECK(piped.exit_code == 0);
        CHECK(piped.output.find("verdict: iterative") != std::string::npos);
    }
}

TEST_CASE("output is byte-identical across repeated runs") {
    const std::array<std::string, 4> invocations = {
        "generate --order 4 --r \"x^2+1\" --s \"x\" --json",
        "coeffs --order 4 --form simplified",
        "coeffs --order 5 --normal",
        "check --coeffs \"0; x; 0; 0\" --json",
    };
    for (const auto& args : invocations) {
        INFO(args);
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
}

TEST_CASE("selftest at a reduced depth exits cleanly") {
    const auto result = run_cli("selftest --max-order 4");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("[ok]") != std::string::npos);
}
