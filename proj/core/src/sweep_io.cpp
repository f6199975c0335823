#include "gaugeqed/experiments.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <ostream>

namespace gaugeqed {

namespace {

void write_header(std::ostream& out, const OutputHeader& header, const SweepResult& result) {
    fmt::print(out, "# gaugeqed {}\n", header.title);
    fmt::print(out, "# units: hbar = 1; eta and transitions in units of omega_c\n");
    fmt::print(out, "# omega_c: {}\n", format_number(result.omega_c));
    fmt::print(out, "# omega_10: {}\n", format_number(result.omega_10));
    fmt::print(out, "# t_n = (E_n - E_0) / omega_c, levels tracked by sorted index\n");
    fmt::print(out, "# converged: 1 when the transitions settled under cutoff growth, "
                    "0 when the dimension cap was hit first\n");
    for (const auto& note : header.notes) fmt::print(out, "# {}\n", note);
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    return fmt::format("{}", value);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, const OutputHeader& header) {
    write_header(out, header, result);
    out << "model,eta,cutoff,converged";
    for (int n = 1; n <= result.levels_reported; ++n) out << ",t" << n;
    out << '\n';
    for (const auto& p : result.points) {
        fmt::print(out, "{},{},{},{}", p.model.label(), format_number(p.eta / result.omega_c),
                   p.cutoff, p.converged ? 1 : 0);
        for (double t : p.transitions) fmt::print(out, ",{}", format_number(t / result.omega_c));
        out << '\n';
    }
}

void write_gnuplot_table(std::ostream& out, const SweepResult& result, const OutputHeader& header) {
    write_header(out, header, result);
    std::string current;
    bool first = true;
    for (const auto& p : result.points) {
        const std::string label = p.model.label();
        if (label != current) {
            if (!first) out << "\n\n";
            first = false;
            current = label;
            fmt::print(out, "# model {}\n# eta", label);
            for (int n = 1; n <= result.levels_reported; ++n) fmt::print(out, " t{}", n);
            out << '\n';
        }
        out << format_number(p.eta / result.omega_c);
        for (double t : p.transitions) out << ' ' << format_number(t / result.omega_c);
        out << '\n';
    }
}

void write_gnuplot_script(std::ostream& out, const std::string& data_file,
                          const SweepResult& result, const std::string& title) {
    std::vector<std::string> labels;
    for (const auto& p : result.points) {
        const std::string label = p.model.label();
        if (labels.empty() || labels.back() != label) labels.push_back(label);
    }
    fmt::print(out, "set title '{}'\n", title);
    out << "set xlabel 'eta'\n"
           "set ylabel '(E_n - E_0) / omega_c'\n"
           "set key outside right\n"
           "set grid\n";
    out << "plot \\\n";
    const std::string dashes[] = {"1", "2", "3", "4", "5"};
    for (std::size_t m = 0; m < labels.size(); ++m) {
        for (int n = 1; n <= result.levels_reported; ++n) {
            const bool last = m + 1 == labels.size() && n == result.levels_reported;
            fmt::print(out, "  '{}' index {} using 1:{} with lines lc {} dt {} {}{}\n", data_file, m,
                       n + 1, m + 1, dashes[m % 5],
                       n == 1 ? fmt::format("title '{}'", labels[m]) : std::string("notitle"),
                       last ? "" : ", \\");
        }
    }
}

void write_taylor_csv(std::ostream& out, const TaylorStudyResult& result,
                      const OutputHeader& header) {
    fmt::print(out, "# gaugeqed {}\n", header.title);
    fmt::print(out, "# units: hbar = 1; eta in units of omega_c\n");
    fmt::print(out, "# cutoff: {}\n", result.cutoff);
    fmt::print(out, "# error = max_n |t_n - t_n^exact| / max(|t_n^exact|, omega_c)\n");
    for (const auto& note : header.notes) fmt::print(out, "# {}\n", note);
    for (const auto& row : result.rows) {
        fmt::print(out, "# order {}: threshold {}; breakdown {}\n", row.order,
                   format_number(row.threshold),
                   row.breakdown_eta ? format_number(*row.breakdown_eta) : std::string("none"));
    }
    out << "order,eta,error\n";
    for (const auto& row : result.rows) {
        for (std::size_t e = 0; e < row.errors.size(); ++e) {
            fmt::print(out, "{},{},{}\n", row.order, format_number(result.eta_grid[e]),
                       format_number(row.errors[e]));
        }
    }
}

}  // namespace gaugeqed
