#pragma once

// Convergence-controlled parameter sweeps over the gauge family.
//
// Every grid point is an independent work item. Results are stored by grid
// index, so the worker count never changes the output.

#include "gaugeqed/dicke.hpp"
#include "gaugeqed/fluxonium.hpp"
#include "gaugeqed/rabi.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaugeqed {

enum class ModelKind {
    dipole,            // D
    coulomb_standard,  // Cstd
    coulomb_correct,   // Ccorr
    coulomb_taylor,    // Taylor:<order>
    alpha_gauge,       // Alpha:<alpha>
    dicke_dipole,      // DickeD
    dicke_standard,    // DickeCstd
    dicke_correct,     // DickeCcorr
    flux_standard,     // FluxCstd
    flux_correct,      // FluxCcorr
};

struct ModelSpec {
    ModelKind kind = ModelKind::dipole;
    int taylor_order = 0;
    double alpha = 0.0;

    std::string label() const;
    /// Inverse of label(). Throws ErrorKind::validation on unknown names.
    static ModelSpec parse(std::string_view text);
};

/// Comma-separated model labels.
std::vector<ModelSpec> parse_models(std::string_view list);

struct ConvergencePolicy {
    int initial_cutoff = 20;
    double growth = 2.0;
    double tolerance = 1e-8;  // max transition change between successive cutoffs, units of ω_c
    Index dim_cap = default_kron_dim_cap;
};

struct SweepSpec {
    std::vector<ModelSpec> models;
    std::vector<double> eta_grid;
    double omega_c = 1.0;
    double detuning = 0.0;  // ω_10 - ω_c
    int levels_reported = 6;
    ConvergencePolicy convergence;
    int n_dipoles = 1;                        // Dicke models
    std::optional<FluxoniumParams> fluxonium; // Flux models; ω_10 comes from the solved qubit
    int threads = 1;

    void validate() const;
};

/// 0, step, 2 step, ... up to eta_max inclusive (each point computed as k·step).
std::vector<double> eta_range(double eta_max, double step);

struct ConvergenceStep {
    int cutoff = 0;
    double change = 0.0;  // max |Δt_n| against the previous cutoff; 0 for the first entry
};

struct SweepPoint {
    ModelSpec model;
    double eta = 0.0;
    int cutoff = 0;
    bool converged = false;
    std::vector<double> transitions;  // t_n = E_n - E_0, n = 1..levels_reported
    std::vector<ConvergenceStep> trail;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // model-major, then eta-grid order
    double omega_c = 1.0;
    double omega_10 = 1.0;
    int levels_reported = 0;

    /// Points belonging to one model, in eta-grid order.
    std::vector<SweepPoint> for_model(const std::string& label) const;
    bool all_converged() const;
};

/// Hamiltonian of one model at one coupling and cutoff.
OperatorMatrix build_model(const ModelSpec& model, const SweepSpec& spec, double eta, int cutoff,
                           const FluxoniumBasis* flux_basis = nullptr);

/// Grows the cutoff until the reported transitions settle. A point that hits
/// the dimension cap is returned with converged = false (CutoffCeiling).
SweepPoint converge_point(const ModelSpec& model, const SweepSpec& spec, double eta,
                          const FluxoniumBasis* flux_basis = nullptr);

SweepResult run_sweep(const SweepSpec& spec);

/// Runs `count` independent tasks on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& task);

struct TaylorStudySpec {
    double omega_c = 1.0;
    double detuning = 0.0;
    int cutoff = 80;
    std::vector<int> orders{1, 2, 3, 4, 5, 10, 20, 50, 100, 200};
    std::vector<double> eta_grid = eta_range(1.5, 0.025);
    int levels_compared = 5;
    double accuracy = 0.01;   // threshold for η*
    double breakdown = 0.10;  // reported first η with error above this
    int threads = 1;

    void validate() const;
};

struct TaylorRow {
    int order = 0;
    std::vector<double> errors;  // per eta-grid point
    /// Largest grid η such that every grid point up to it has error <= accuracy.
    double threshold = 0.0;
    /// First grid η with error > breakdown (empty if never).
    std::optional<double> breakdown_eta;
};

struct TaylorStudyResult {
    std::vector<double> eta_grid;
    std::vector<TaylorRow> rows;
    int cutoff = 0;
    const TaylorRow& row(int order) const;
};

/// Relative error max_n |t_n - t_n^exact| / max(|t_n^exact|, ω_c) over the
/// lowest levels_compared transitions, H_C^(n) against H_C at a fixed cutoff.
TaylorStudyResult taylor_study(const TaylorStudySpec& spec);

struct AlphaStudySpec {
    double omega_c = 1.0;
    double detuning = 0.0;
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> eta_grid = eta_range(1.5, 0.1);
    int levels_reported = 6;
    ConvergencePolicy convergence;
    /// Negative control: use the standard Coulomb model in place of α = 1.
    bool substitute_standard = false;
    int threads = 1;

    void validate() const;
};

struct AlphaStudyResult {
    double max_spread = 0.0;
    double worst_eta = 0.0;
    int worst_level = 0;              // 1-based transition index
    std::vector<double> spreads;      // per eta-grid point
    std::vector<double> eta_grid;

    bool passes(double tolerance = 1e-6) const { return max_spread <= tolerance; }
};

/// Throws ErrorKind::cutoff_ceiling if any point fails to converge.
AlphaStudyResult alpha_invariance_study(const AlphaStudySpec& spec);

// Output.

struct OutputHeader {
    std::string title;
    std::vector<std::string> notes;  // extra "# key: value" lines
};

/// CSV: '#' header lines, then "model,eta,cutoff,converged,t1,...,tK".
void write_sweep_csv(std::ostream& out, const SweepResult& result, const OutputHeader& header);

/// Whitespace table, one gnuplot index block per model.
void write_gnuplot_table(std::ostream& out, const SweepResult& result, const OutputHeader& header);

/// gnuplot script plotting `data_file` (as written by write_gnuplot_table).
void write_gnuplot_script(std::ostream& out, const std::string& data_file,
                          const SweepResult& result, const std::string& title);

/// CSV: "order,eta,error" rows, then "# threshold" lines per order.
void write_taylor_csv(std::ostream& out, const TaylorStudyResult& result,
                      const OutputHeader& header);

/// Shortest round-trip decimal for a double, as used in every output file.
std::string format_number(double value);

}  // namespace gaugeqed
