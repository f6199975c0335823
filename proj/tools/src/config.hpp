#pragma once

// RunConfig: one plain field per flag. Config-file keys are the long flag names
// without dashes, under a section named after the subcommand.

#include <optional>
#include <string>
#include <vector>

namespace gaugeqed::cli {

struct CommonOptions {
    int threads = 1;
    std::string out;  // empty: stdout, or <out_dir>/<subcommand>.csv
    bool emit_plots = false;
};

struct ConvergenceOptions {
    int initial_cutoff = 20;
    double growth = 2.0;
    double tolerance = 1e-8;
    long long dim_cap = 4096;
};

struct SweepOptions {
    double eta_max = 1.5;
    double eta_step = 0.025;
    double detuning = 0.0;  // (ω_10 - ω_c) / ω_c
    int levels = 6;
    std::vector<std::string> models;
    ConvergenceOptions convergence;
};

inline SweepOptions sweep_defaults(std::vector<std::string> models, double eta_max = 1.5) {
    SweepOptions s;
    s.models = std::move(models);
    s.eta_max = eta_max;
    return s;
}

struct RabiSweepConfig {
    SweepOptions sweep = sweep_defaults({"D", "Cstd", "Ccorr"});
};

struct DickeSweepConfig {
    SweepOptions sweep = sweep_defaults({"DickeD", "DickeCstd", "DickeCcorr"});
    int n_dipoles = 2;
};

struct TaylorConfig {
    double eta_max = 1.5;
    double eta_step = 0.025;
    double detuning = 0.0;
    int cutoff = 80;
    std::vector<int> orders{1, 2, 3, 4, 5, 10, 20, 50, 100, 200};
    int levels = 5;
    double accuracy = 0.01;
    double breakdown = 0.10;
};

struct AlphaConfig {
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
    std::optional<double> eta;
    double eta_max = 1.5;
    double eta_step = 0.1;
    double detuning = 0.0;
    int levels = 6;
    ConvergenceOptions convergence;
    double max_spread = 1e-6;
    bool substitute_standard = false;
};

struct GaugeTheoremConfig {
    double eta = 0.5;
    double detuning = 0.0;
    std::vector<int> cutoffs{80, 100, 120, 140};
    std::optional<int> interior;
    double tolerance = 1e-8;
};

struct FluxoniumConfig {
    double e_c = 0.2;
    double e_l = 0.15;
    double e_j = 1.0;
    int basis_size = 60;
    SweepOptions sweep = sweep_defaults({"FluxCstd", "FluxCcorr"}, 1.0);
    double check_tolerance = 1e-9;
};

struct ParticleOptions {
    std::string potential = "double_well";
    std::string table;  // two-column file when potential = table
    double mu = 2.0;
    double lambda = 0.5;
    double omega0 = 1.0;
    double mass = 1.0;
    double charge = 1.0;
    std::optional<double> x_min;  // preset default when unset
    std::optional<double> x_max;
    std::optional<int> points;
    std::optional<int> levels;  // 10 for harmonic, else 50
};

struct ParticleDemoConfig {
    ParticleOptions particle;
    std::vector<int> kernel_levels;  // empty: powers of two up to M
    double kernel_width = 1.0;
    double a0 = 0.3;
    int subspace_levels = 10;
    std::vector<int> trk_levels;  // empty: 2, 10, M
    double mc_tolerance = 1e-6;
};

struct FullModelConfig {
    ParticleOptions particle;
    double eta = 0.3;                // q A0 <1|x|0>
    std::optional<double> omega_c;  // raw units; resonant with ω_10 when unset
    std::vector<int> m_used{2, 4, 8, 16, 32};
    int cutoff = 30;
    std::string x2 = "full";
    int levels = 6;
};

struct RunConfig {
    std::string subcommand;
    CommonOptions common;
    RabiSweepConfig rabi_sweep;
    DickeSweepConfig dicke_sweep;
    TaylorConfig taylor;
    AlphaConfig alpha;
    GaugeTheoremConfig gauge;
    FluxoniumConfig fluxonium;
    ParticleDemoConfig particle_demo;
    FullModelConfig full_model;
};

}  // namespace gaugeqed::cli
