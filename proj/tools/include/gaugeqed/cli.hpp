#pragma once

// Batch front end. `run` is the whole program minus process plumbing, so the
// tests drive it with in-memory streams.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gaugeqed::cli {

enum ExitCode : int {
    exit_success = 0,
    exit_validation = 1,  // bad flags, config file or parameter ranges
    exit_numerical = 2,   // a numerical invariant failed; named on stderr
};

struct Environment {
    std::ostream& out;
    std::ostream& err;
    /// Default output directory (GAUGEQED_OUT_DIR in the executable).
    std::optional<std::filesystem::path> out_dir;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, const Environment& env);

}  // namespace gaugeqed::cli
