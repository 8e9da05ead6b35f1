#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chanent::cli {

// Exit codes shared by all commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;      // bad arguments or malformed input
inline constexpr int exit_invalid = 2;    // input fails a validation / check
inline constexpr int exit_not_classical = 3; // hent on a non-classical channel

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    double p = -1.0;
    double q = -1.0;
    double sweep_start = 0.0; // 0 means "derive from step"
    double sweep_stop = 0.0;
    double sweep_step = 0.1;
    int count = 100;
    std::uint64_t seed = 42;
    int n = 2;
    double tolerance = -1.0;  // < 0 means defaults
    bool bits = false;
    bool normalized = false;
};

/// Entry point shared by the binary and the tests. Never throws;
/// errors become diagnostics on stderr plus a nonzero exit code.
int run(const std::vector<std::string>& args);

} // namespace chanent::cli
