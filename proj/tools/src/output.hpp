#pragma once

#include "gaugeqed/cli.hpp"
#include "gaugeqed/experiments.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gaugeqed::cli {

/// Where a subcommand's primary output goes, and its companion files.
class OutputTarget {
public:
    /// `out` empty: stdout, unless `env.out_dir` names a directory, in which case
    /// <out_dir>/<subcommand>.csv. Relative paths resolve against out_dir when set.
    OutputTarget(const std::string& out, const std::string& subcommand, const Environment& env);

    bool is_file() const noexcept { return !path_.empty(); }
    const std::filesystem::path& path() const noexcept { return path_; }

    /// Same directory, stem + suffix (".gp", "_kernel.dat", ...).
    std::filesystem::path sibling(std::string_view suffix) const;

    void write(const std::string& text) const;
    void write_sibling(std::string_view suffix, const std::string& text) const;

private:
    std::filesystem::path path_;
    std::ostream* stream_;
};

struct PlotSeries {
    int column = 0;  // 1-based CSV column
    std::string title;
};

/// gnuplot script for a comma-separated file with '#' comments.
std::string csv_plot_script(const std::string& data_file, const std::string& title,
                            const std::string& xlabel, const std::string& ylabel, int x_column,
                            const std::vector<PlotSeries>& series, bool log_y);

/// Error against η, one curve per Taylor order, from the long-format CSV.
std::string taylor_plot_script(const std::string& data_file, const TaylorStudyResult& result);

/// pm3d map of an "x x' V" triplet table.
std::string kernel_plot_script(const std::string& data_file, const std::string& title);

}  // namespace gaugeqed::cli
