#pragma once

// Runs the CLI binary (path injected by the build) and captures stdout.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace mhg::testing {

struct CliResult {
    int exit_code;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(MHG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), std::move(out)};
}

}  // namespace mhg::testing
