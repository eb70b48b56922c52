#pragma once

/// \file cli.hpp
/// \brief Subcommands of the pivot-buffon tool.
///
/// Each cmd_* function computes its whole result before rendering, so a
/// failure (an exception derived from pivot_buffon::Error) never leaves
/// partial output behind. `run` wraps argument parsing and maps outcomes
/// onto exit codes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pivot_buffon::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitValidationFailed = 1,
    kExitUsage = 2,
};

enum class Format { json, csv };

/// Environment variable supplying the seed when --seed is absent.
inline constexpr const char* kSeedEnvVar = "PIVOT_BUFFON_SEED";

struct ExactOptions {
    double a = 0.0;
    double b = 0.0;
    double d = 1.0;
    std::optional<double> phi;
    Format format = Format::json;
};

struct SimulateOptions {
    double a = 0.0;
    double b = 0.0;
    double d = 1.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint32_t chunks = 1;
    std::optional<double> phi;
    Format format = Format::json;
    bool allow_long_needle = false;
};

struct ValidateOptions {
    SimulateOptions sim;
    /// Test hook: multiplies the exact p1 before comparison.
    double inject_p1_scale = 1.0;
};

struct SweepOptions {
    double d = 1.0;
    double total = 1.0;
    unsigned steps = 10;
    Format format = Format::csv;
};

/// |z| must stay below this for every category.
inline constexpr double kZThreshold = 4.0;
/// The chi-square p-value must exceed this.
inline constexpr double kPValueThreshold = 1e-3;

std::string cmd_exact(const ExactOptions& opts);
std::string cmd_simulate(const SimulateOptions& opts);

struct ValidateOutcome {
    std::string output;
    bool pass = false;
};

ValidateOutcome cmd_validate(const ValidateOptions& opts);
std::string cmd_sweep(const SweepOptions& opts);

/// Parses `args` (args[0] is the program name) and runs the subcommand.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pivot_buffon::cli
