#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace altiset::cli {

inline constexpr const char* tool_version = "0.1.0";

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_usage = 64;

enum class Command { altiset, layers, correlate, collective, skyline, evolve };

struct GridSpec {
    std::size_t cells_x = 128;
    std::size_t cells_y = 128;
};

struct RunConfig {
    Command command = Command::altiset;
    std::string input;           // dataset path
    bool input_is_system = false; // altiset: OrderSystem JSON instead of relation JSON
    std::optional<std::string> output;
    bool timestamp = true;

    // altiset
    std::optional<std::vector<std::size_t>> subset;
    // layers
    std::optional<std::string> chain;
    // collective
    std::string collective_method = "altiset";
    // skyline
    std::string skyline_method = "oracle";
    std::size_t block_size = 16;
    std::vector<double> reference;
    std::optional<std::string> space;
    bool records = false;
    // evolve
    std::optional<GridSpec> grid;
    double inflate = 0.25;
    std::size_t max_steps = 1000;
    std::optional<std::string> trace;
};

/// "WxH" or "N" (square). Throws std::invalid_argument on malformed text.
GridSpec parse_grid_spec(const std::string& text);

/// Executes one configured command, writing the JSON document to the
/// configured output (or `out`) and diagnostics to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace altiset::cli
