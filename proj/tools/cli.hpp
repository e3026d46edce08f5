#pragma once

// Command dispatch for the cyclab executable, kept out of main() so tests can
// drive it directly.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cyclab/exp_poly.hpp"
#include "cyclab/serialize.hpp"

namespace cyclab::cli {

enum class Command { coeffs, rolle, zeros, sweep, cartan, remez, frobenius };

Command command_from_string(const std::string& name);
const char* to_string(Command command);

struct RunManifest {
    Command command = Command::coeffs;
    std::filesystem::path input_path;
    std::filesystem::path output_path;
    std::size_t truncation = kDefaultTruncation;

    // Unset values fall back to the input document, then to library defaults.
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::size_t> samples;
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<double> H;
    std::optional<double> d;
    std::optional<double> R;
    std::optional<double> c_hat;
    /// coeffs: highest index n reported.
    std::size_t max_n = 10;
};

enum ExitStatus : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_schema = 2,
    exit_io = 3,
    exit_numeric = 4,
};

/// Runs the command on a parsed input document and returns the report.
/// Throws the library's errors unchanged.
Json execute(const RunManifest& manifest, const Json& input);

/// CSV rendering of a report: per-sample rows for sweeps, (n, re, im) rows
/// for coeffs, flattened key,value rows otherwise.
std::string render_csv(Command command, const Json& report);

/// Reads the input, executes, and writes the report in the format implied by
/// the output extension. Diagnostics go to `err`.
int run(const RunManifest& manifest, std::ostream& err);

}  // namespace cyclab::cli
