// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. If the CLI binary path is
// supplied as argv[1], additionally smoke-checks subprocess determinism.

#include "banalg/report.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <regex>
#include <string>

namespace {

std::string run_command(const std::string& command) {
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return output;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    pclose(pipe);
    return output;
}

std::string strip_timing(const std::string& text) {
    static const std::regex timing("\"wall_time_ms\":[0-9.eE+-]+,?");
    return std::regex_replace(text, timing, "");
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = 7;
    const int order = 8;

    std::vector<banalg::CriterionResult> results = banalg::run_acceptance(seed, order);
    bool all_pass = true;
    for (const banalg::CriterionResult& r : results) {
        std::printf("%s  [%d] %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.ms);
        if (!r.pass) {
            std::printf("      details: %s\n", r.details.c_str());
            all_pass = false;
        }
    }

    if (argc > 1) {
        std::string cli = argv[1];
        std::string cmd = "'" + cli + "' certify --flavor poly --trials 60 --seed 7 2>/dev/null";
        std::string first = run_command(cmd);
        std::string second = run_command(cmd);
        bool cli_ok = !first.empty() && strip_timing(first) == strip_timing(second);
        std::string hepi_cmd = "'" + cli +
                               "' verify-hepi --source poly --target tate:1 --ring padic:2 "
                               "--order 8 2>/dev/null";
        std::string h1 = run_command(hepi_cmd);
        std::string h2 = run_command(hepi_cmd);
        cli_ok = cli_ok && !h1.empty() && strip_timing(h1) == strip_timing(h2);
        std::printf("%s  [cli] subprocess report determinism\n", cli_ok ? "PASS" : "FAIL");
        all_pass = all_pass && cli_ok;
    }

    return all_pass ? 0 : 1;
}
