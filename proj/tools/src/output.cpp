#include "output.hpp"

#include "gaugeqed/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <system_error>

namespace gaugeqed::cli {

namespace fs = std::filesystem;

OutputTarget::OutputTarget(const std::string& out, const std::string& subcommand,
                           const Environment& env)
    : stream_(&env.out) {
    if (!out.empty()) {
        fs::path p(out);
        path_ = (p.is_relative() && env.out_dir) ? *env.out_dir / p : p;
    } else if (env.out_dir) {
        path_ = *env.out_dir / (subcommand + ".csv");
    }
}

fs::path OutputTarget::sibling(std::string_view suffix) const {
    require(is_file(), "companion files need a file output (--out or GAUGEQED_OUT_DIR)");
    fs::path p = path_;
    p.replace_filename(path_.stem().string() + std::string(suffix));
    return p;
}

namespace {

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        require(!ec, "cannot create directory " + path.parent_path().string());
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(file), "cannot open " + path.string() + " for writing");
    file << text;
    file.close();
    require(!file.fail(), "failed writing " + path.string());
}

}  // namespace

void OutputTarget::write(const std::string& text) const {
    if (is_file()) {
        write_file(path_, text);
    } else {
        *stream_ << text;
        stream_->flush();
    }
}

void OutputTarget::write_sibling(std::string_view suffix, const std::string& text) const {
    write_file(sibling(suffix), text);
}

std::string csv_plot_script(const std::string& data_file, const std::string& title,
                            const std::string& xlabel, const std::string& ylabel, int x_column,
                            const std::vector<PlotSeries>& series, bool log_y) {
    std::string s = fmt::format(
        "set title '{}'\n"
        "set datafile separator ','\n"
        "set datafile commentschars '#'\n"
        "set key autotitle columnhead\n"
        "set xlabel '{}'\n"
        "set ylabel '{}'\n"
        "set grid\n",
        title, xlabel, ylabel);
    if (log_y) s += "set logscale y\nset format y '%.0e'\n";
    s += "plot \\\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        s += fmt::format("  '{}' using {}:{} with linespoints title '{}'{}\n", data_file, x_column,
                         series[i].column, series[i].title, i + 1 < series.size() ? ", \\" : "");
    }
    return s;
}

std::string taylor_plot_script(const std::string& data_file, const TaylorStudyResult& result) {
    std::string s =
        "set title 'gaugeqed taylor-study'\n"
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set xlabel 'eta'\n"
        "set ylabel 'max relative error'\n"
        "set logscale y\n"
        "set format y '%.0e'\n"
        "set yrange [1e-16:*]\n"
        "set grid\n"
        "plot \\\n";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const int n = result.rows[i].order;
        s += fmt::format("  '{}' using 2:($1 == {} ? $3 : 1/0) with lines title 'n = {}'{}\n",
                         data_file, n, n, i + 1 < result.rows.size() ? ", \\" : "");
    }
    return s;
}

std::string kernel_plot_script(const std::string& data_file, const std::string& title) {
    return fmt::format(
        "set title '{}'\n"
        "set xlabel 'x'\n"
        "set ylabel \"x'\"\n"
        "set view map\n"
        "set size square\n"
        "set palette defined (-1 'blue', 0 'white', 1 'red')\n"
        "splot '{}' using 1:2:3 with pm3d notitle\n",
        title, data_file);
}

}  // namespace gaugeqed::cli
