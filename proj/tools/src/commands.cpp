#include "commands.hpp"

#include "gaugeqed/errors.hpp"
#include "gaugeqed/experiments.hpp"
#include "gaugeqed/fluxonium.hpp"
#include "gaugeqed/particle1d.hpp"
#include "gaugeqed/rabi.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gaugeqed::cli {

namespace {

using gaugeqed::format_number;

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : ",") + item;
    return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
    std::vector<std::string> items;
    for (T v : values) items.push_back(format_number(static_cast<double>(v)));
    return join(items);
}

std::string data_file_name(const Context& ctx, std::string_view suffix) {
    return ctx.output.sibling(suffix).filename().string();
}

ConvergencePolicy to_policy(const ConvergenceOptions& o) {
    ConvergencePolicy c;
    c.initial_cutoff = o.initial_cutoff;
    c.growth = o.growth;
    c.tolerance = o.tolerance;
    c.dim_cap = static_cast<Index>(o.dim_cap);
    return c;
}

std::string policy_note(const ConvergenceOptions& o) {
    return fmt::format("cutoff growth: initial {}, factor {}, tolerance {}, dimension cap {}",
                       o.initial_cutoff, format_number(o.growth), format_number(o.tolerance),
                       o.dim_cap);
}

enum class Family { rabi, dicke, flux };

bool in_family(ModelKind kind, Family family) {
    switch (kind) {
        case ModelKind::dipole:
        case ModelKind::coulomb_standard:
        case ModelKind::coulomb_correct:
        case ModelKind::coulomb_taylor:
        case ModelKind::alpha_gauge:
            return family == Family::rabi;
        case ModelKind::dicke_dipole:
        case ModelKind::dicke_standard:
        case ModelKind::dicke_correct:
            return family == Family::dicke;
        case ModelKind::flux_standard:
        case ModelKind::flux_correct:
            return family == Family::flux;
    }
    return false;
}

SweepSpec make_sweep(const SweepOptions& o, Family family, int threads) {
    SweepSpec s;
    for (const auto& label : o.models) {
        ModelSpec m = ModelSpec::parse(label);
        require(in_family(m.kind, family), "model " + label + " does not belong to this subcommand");
        s.models.push_back(m);
    }
    s.eta_grid = eta_range(o.eta_max, o.eta_step);
    s.detuning = o.detuning;
    s.levels_reported = o.levels;
    s.convergence = to_policy(o.convergence);
    s.threads = threads;
    return s;
}

std::vector<std::string> sweep_notes(const SweepOptions& o) {
    return {
        "detuning: " + format_number(o.detuning),
        "models: " + join(o.models),
        fmt::format("eta grid: 0 to {} step {}", format_number(o.eta_max), format_number(o.eta_step)),
        policy_note(o.convergence),
    };
}

void emit_sweep(const std::string& title, const SweepSpec& spec, std::vector<std::string> notes,
                const RunConfig& cfg, Context& ctx) {
    spec.validate();
    const SweepResult result = run_sweep(spec);
    const OutputHeader header{title, std::move(notes)};

    std::ostringstream csv;
    write_sweep_csv(csv, result, header);
    ctx.output.write(csv.str());

    if (cfg.common.emit_plots) {
        std::ostringstream table;
        write_gnuplot_table(table, result, header);
        ctx.output.write_sibling(".dat", table.str());
        std::ostringstream script;
        write_gnuplot_script(script, data_file_name(ctx, ".dat"), result, "gaugeqed " + title);
        ctx.output.write_sibling(".gp", script.str());
    }

    const auto stuck = std::count_if(result.points.begin(), result.points.end(),
                                     [](const SweepPoint& p) { return !p.converged; });
    if (stuck > 0) {
        ctx.fail_check("cutoff-ceiling",
                       fmt::format("{} of {} sweep points hit the dimension cap before converging",
                                   stuck, result.points.size()));
    }
}

// Particle presets.

Grid preset_grid(const ParticleOptions& o) {
    Grid g = o.potential == "harmonic" ? Grid{-12.0, 12.0, 961} : Grid{-6.0, 6.0, 801};
    if (o.x_min) g.x_min = *o.x_min;
    if (o.x_max) g.x_max = *o.x_max;
    if (o.points) g.n_points = *o.points;
    return g;
}

ParticleModel make_particle(const ParticleOptions& o) {
    const int levels = o.levels.value_or(o.potential == "harmonic" ? 10 : 50);
    require(levels >= 2, "particle levels must be >= 2");
    ParticleModel m;
    if (o.potential == "table") {
        require(!o.table.empty(), "potential = table needs --table");
        require(!o.x_min && !o.x_max && !o.points,
                "grid flags do not apply to a tabulated potential");
        std::ifstream in(o.table);
        require(static_cast<bool>(in), "cannot read potential table " + o.table);
        m = ParticleModel::from_table(in, o.mass, levels);
    } else if (o.potential == "harmonic") {
        m = ParticleModel::harmonic(o.omega0, o.mass, preset_grid(o), levels);
    } else {
        require(o.potential == "double_well", "unknown potential " + o.potential);
        m = ParticleModel::double_well(o.mu, o.lambda, o.mass, preset_grid(o), levels);
    }
    m.charge = o.charge;
    m.validate();
    return m;
}

std::vector<std::string> particle_notes(const ParticleOptions& o, const ParticleModel& m) {
    std::string potential;
    if (o.potential == "harmonic") {
        potential = fmt::format("harmonic, omega0 {}", format_number(o.omega0));
    } else if (o.potential == "double_well") {
        potential = fmt::format("double_well, V = -mu x^2 + lambda x^4, mu {}, lambda {}",
                                format_number(o.mu), format_number(o.lambda));
    } else {
        potential = "table " + std::filesystem::path(o.table).filename().string();
    }
    return {
        "potential: " + potential,
        fmt::format("mass: {}; charge: {}", format_number(m.mass), format_number(m.charge)),
        fmt::format("grid: [{}, {}], {} points, 4th-order finite differences",
                    format_number(m.grid.x_min), format_number(m.grid.x_max), m.grid.n_points),
        fmt::format("particle levels: {}", m.eigen_count),
    };
}

std::string header_lines(const std::string& title, const std::string& units,
                         const std::vector<std::string>& notes) {
    std::string s = fmt::format("# gaugeqed {}\n# units: {}\n", title, units);
    for (const auto& n : notes) s += "# " + n + "\n";
    return s;
}

std::vector<int> powers_of_two_up_to(int m) {
    std::vector<int> out;
    for (int k = 2; k <= m; k *= 2) out.push_back(k);
    return out;
}

}  // namespace

void Context::summary(const std::string& line) const {
    if (output.is_file()) env.out << line << '\n';
}

void rabi_sweep(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.rabi_sweep.sweep;
    emit_sweep("rabi-sweep", make_sweep(o, Family::rabi, cfg.common.threads), sweep_notes(o), cfg,
               ctx);
}

void dicke_sweep(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.dicke_sweep.sweep;
    SweepSpec spec = make_sweep(o, Family::dicke, cfg.common.threads);
    spec.n_dipoles = cfg.dicke_sweep.n_dipoles;
    auto notes = sweep_notes(o);
    notes.push_back(fmt::format("n_dipoles: {} (symmetric sector j = N/2)", spec.n_dipoles));
    emit_sweep("dicke-sweep", spec, std::move(notes), cfg, ctx);
}

void taylor_study(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.taylor;
    TaylorStudySpec spec;
    spec.detuning = o.detuning;
    spec.cutoff = o.cutoff;
    spec.orders = o.orders;
    spec.eta_grid = eta_range(o.eta_max, o.eta_step);
    spec.levels_compared = o.levels;
    spec.accuracy = o.accuracy;
    spec.breakdown = o.breakdown;
    spec.threads = cfg.common.threads;
    spec.validate();
    const TaylorStudyResult result = gaugeqed::taylor_study(spec);

    const OutputHeader header{
        "taylor-study",
        {
            "detuning: " + format_number(o.detuning),
            fmt::format("levels compared: {}", o.levels),
            fmt::format("threshold: largest eta with error <= {} at every grid point up to it",
                        format_number(o.accuracy)),
            fmt::format("breakdown: first eta with error > {}", format_number(o.breakdown)),
        }};
    std::ostringstream csv;
    write_taylor_csv(csv, result, header);
    ctx.output.write(csv.str());
    if (cfg.common.emit_plots) {
        ctx.output.write_sibling(".gp",
                                 taylor_plot_script(ctx.output.path().filename().string(), result));
    }
}

void alpha_check(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.alpha;
    AlphaStudySpec spec;
    spec.detuning = o.detuning;
    spec.alphas = o.alphas;
    spec.eta_grid = o.eta ? std::vector<double>{*o.eta} : eta_range(o.eta_max, o.eta_step);
    spec.levels_reported = o.levels;
    spec.convergence = to_policy(o.convergence);
    spec.substitute_standard = o.substitute_standard;
    spec.threads = cfg.common.threads;
    spec.validate();
    require(o.max_spread > 0.0, "max-spread must be > 0");
    const AlphaStudyResult r = alpha_invariance_study(spec);
    const bool pass = r.passes(o.max_spread);

    std::vector<std::string> notes{
        "detuning: " + format_number(o.detuning),
        "alphas: " + join_numbers(o.alphas),
        policy_note(o.convergence),
        fmt::format("spread = max over n = 1..{} of (max - min over alpha of t_n)", o.levels),
    };
    if (o.substitute_standard) notes.push_back("control: Cstd substituted for alpha = 1");
    notes.push_back("max_spread: " + format_number(r.max_spread));
    notes.push_back("worst_eta: " + format_number(r.worst_eta));
    notes.push_back(fmt::format("worst_level: {}", r.worst_level));
    const std::string verdict = fmt::format("{} (tolerance {})", pass ? "PASS" : "FAIL",
                                            format_number(o.max_spread));
    notes.push_back("result: " + verdict);

    std::string text = header_lines("alpha-check", "hbar = 1; eta and spreads in units of omega_c",
                                    notes);
    text += "eta,spread\n";
    for (std::size_t i = 0; i < r.eta_grid.size(); ++i) {
        text += format_number(r.eta_grid[i]) + "," + format_number(r.spreads[i]) + "\n";
    }
    ctx.output.write(text);
    if (cfg.common.emit_plots) {
        ctx.output.write_sibling(
            ".gp", csv_plot_script(ctx.output.path().filename().string(), "gaugeqed alpha-check",
                                   "eta", "spectral spread / omega_c", 1, {{2, "spread"}}, false));
    }
    ctx.summary(fmt::format("alpha-check: max spread {} -> {}", format_number(r.max_spread),
                            verdict));
    if (!pass) {
        ctx.fail_check("alpha-invariance",
                       fmt::format("spread {} exceeds {} at eta {}, level {}",
                                   format_number(r.max_spread), format_number(o.max_spread),
                                   format_number(r.worst_eta), r.worst_level));
    }
}

void gauge_theorem(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.gauge;
    require(!o.cutoffs.empty(), "gauge-theorem needs at least one cutoff");
    require(o.tolerance > 0.0, "tolerance must be > 0");
    std::vector<GaugeTheoremReport> reports;
    for (int cutoff : o.cutoffs) {
        const RabiParams p = RabiParams::from_detuning(o.eta, o.detuning, cutoff);
        p.validate();
        require(!o.interior || (*o.interior >= 1 && *o.interior <= cutoff + 1),
                "interior must lie in [1, cutoff + 1] for every cutoff");
    }
    for (int cutoff : o.cutoffs) {
        reports.push_back(
            check_gauge_theorem(RabiParams::from_detuning(o.eta, o.detuning, cutoff), o.interior));
    }

    bool decreasing = true;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        decreasing = decreasing && reports[i].full_deviation < reports[i - 1].full_deviation;
    }
    std::vector<std::string> notes{
        "eta: " + format_number(o.eta),
        "detuning: " + format_number(o.detuning),
        "deviation = max entry of |U (H_D + g_D^2/omega_c) U^dag - H_C|",
        o.interior ? fmt::format("interior: Fock levels below {}", *o.interior)
                   : std::string("interior: Fock levels below floor(0.8 (cutoff + 1))"),
        "interior tolerance: " + format_number(o.tolerance),
        std::string("full deviation decreasing in cutoff: ") + (decreasing ? "yes" : "no"),
    };
    std::string text = header_lines("gauge-theorem", "hbar = 1; deviations in units of omega_c",
                                    notes);
    text += "cutoff,interior_levels,full_deviation,interior_deviation,boundary_deviation\n";
    for (const auto& r : reports) {
        text += fmt::format("{},{},{},{},{}\n", r.cutoff, r.interior_levels,
                            format_number(r.full_deviation), format_number(r.interior_deviation),
                            format_number(r.boundary_deviation));
    }
    ctx.output.write(text);
    if (cfg.common.emit_plots) {
        ctx.output.write_sibling(
            ".gp", csv_plot_script(ctx.output.path().filename().string(), "gaugeqed gauge-theorem",
                                   "Fock cutoff", "max deviation / omega_c", 1,
                                   {{3, "full"}, {4, "interior"}, {5, "boundary"}}, true));
    }

    bool pass = true;
    for (const auto& r : reports) {
        if (!r.passes(o.tolerance)) {
            pass = false;
            ctx.fail_check("gauge-theorem",
                           fmt::format("interior deviation {} exceeds {} at cutoff {}",
                                       format_number(r.interior_deviation),
                                       format_number(o.tolerance), r.cutoff));
        }
    }
    ctx.summary(std::string("gauge-theorem: interior block ") + (pass ? "PASS" : "FAIL"));
}

void fluxonium(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.fluxonium;
    FluxoniumParams fp;
    fp.e_c = o.e_c;
    fp.e_l = o.e_l;
    fp.e_j = o.e_j;
    fp.basis_size = o.basis_size;
    fp.validate();
    SweepSpec spec = make_sweep(o.sweep, Family::flux, cfg.common.threads);
    spec.fluxonium = fp;
    spec.validate();
    const FluxoniumBasis basis = solve_fluxonium(fp);

    // Closed form against conjugation at the strongest coupling of the sweep.
    FluxoniumParams strongest = fp;
    strongest.chi0 = spec.eta_grid.back() / basis.phi_10();
    const double check = max_abs_difference(
        build_flux_charge_correct(strongest, basis, CoulombMethod::closed_form),
        build_flux_charge_correct(strongest, basis, CoulombMethod::conjugation));

    auto notes = sweep_notes(o.sweep);
    notes.erase(notes.begin());  // detuning is fixed by the qubit
    notes.push_back(fmt::format("fluxonium: E_C {}, E_L {}, E_J {}, oscillator basis {}",
                                format_number(o.e_c), format_number(o.e_l), format_number(o.e_j),
                                o.basis_size));
    notes.push_back("phi_10: " + format_number(basis.phi_10()));
    notes.push_back("plasma frequency: " + format_number(basis.plasma_frequency));
    notes.push_back("eta = phi_10 chi0, g_C = omega_10 eta");
    notes.push_back(fmt::format("closed form vs conjugation at eta {}, cutoff {}: {}",
                                format_number(spec.eta_grid.back()), strongest.cutoff,
                                format_number(check)));
    emit_sweep("fluxonium", spec, std::move(notes), cfg, ctx);

    if (check > o.check_tolerance) {
        ctx.fail_check("fluxonium closed form",
                       fmt::format("closed form differs from conjugation by {} (> {})",
                                   format_number(check), format_number(o.check_tolerance)));
    }
}

void particle_demo(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.particle_demo;
    const ParticleModel model = make_particle(o.particle);
    const int m = model.eigen_count;
    const std::vector<int> kernel_levels =
        o.kernel_levels.empty() ? powers_of_two_up_to(m) : o.kernel_levels;
    std::vector<int> trk_levels = o.trk_levels;
    if (trk_levels.empty()) {
        for (int k : {2, 10, m}) {
            if (k <= m) trk_levels.push_back(k);
        }
    }
    std::sort(trk_levels.begin(), trk_levels.end());
    trk_levels.erase(std::unique(trk_levels.begin(), trk_levels.end()), trk_levels.end());
    for (int k : kernel_levels) require(k >= 1 && k <= m, "kernel levels must lie in [1, levels]");
    for (int k : trk_levels) require(k >= 2 && k <= m, "trk levels must lie in [2, levels]");
    require(o.mc_tolerance > 0.0, "mc-tolerance must be > 0");

    const MatterBasis basis = solve_particle(model);
    std::vector<std::pair<std::string, double>> rows;
    for (int i = 0; i < std::min(m, 6); ++i) rows.emplace_back(fmt::format("energy_{}", i), basis.energies[i]);
    rows.emplace_back("omega_10", basis.omega(1, 0));
    if (m > 2) rows.emplace_back("omega_21", basis.omega(2, 1));
    rows.emplace_back("x_10", basis.x_elems(1, 0));
    for (int k : trk_levels) rows.emplace_back(fmt::format("trk_{}", k), trk_sum(basis, model, k));
    std::vector<NonlocalKernel> kernels;
    for (int k : kernel_levels) {
        kernels.push_back(nonlocal_kernel(basis, model, k, o.kernel_width));
        rows.emplace_back(fmt::format("kernel_offdiag_{}", k), kernels.back().off_diagonality);
    }
    const MinimalCouplingReport mc = check_minimal_coupling_identity(model, o.a0, o.subspace_levels);
    rows.emplace_back("mc_raw_residual", mc.raw_residual);
    rows.emplace_back("mc_subspace_residual", mc.subspace_residual);
    rows.emplace_back("mc_relative_residual", mc.relative_residual);
    rows.emplace_back("mc_spectral_residual", mc.spectral_residual);

    auto notes = particle_notes(o.particle, model);
    notes.push_back(fmt::format("trk_k = sum over n < k of 2 m omega_n0 |x_n0|^2"));
    notes.push_back(fmt::format(
        "kernel_offdiag_k: weight of the k-level projected potential at |x - x'| > {}",
        format_number(o.kernel_width)));
    notes.push_back(fmt::format(
        "mc_*: phase conjugation vs direct substitution p -> p - q A0, q A0 = {}, subspace {}",
        format_number(model.charge * o.a0), o.subspace_levels));
    std::string text = header_lines("particle-demo", "hbar = 1; particle natural units", notes);
    text += "quantity,value\n";
    for (const auto& [key, value] : rows) text += key + "," + format_number(value) + "\n";
    ctx.output.write(text);

    if (cfg.common.emit_plots && !kernels.empty()) {
        // Smallest k, subsampled to at most ~200 points per axis.
        const NonlocalKernel& kernel = kernels.front();
        const int n = model.grid.n_points;
        const int stride = std::max(1, (n + 199) / 200);
        std::string table = fmt::format("# gaugeqed particle-demo kernel, k = {}\n# x x' V\n",
                                        kernel.levels);
        for (int i = 0; i < n; i += stride) {
            for (int j = 0; j < n; j += stride) {
                table += fmt::format("{} {} {}\n", format_number(model.grid.x(i)),
                                     format_number(model.grid.x(j)),
                                     format_number(kernel.values(i, j)));
            }
            table += "\n";
        }
        ctx.output.write_sibling("_kernel.dat", table);
        ctx.output.write_sibling(
            ".gp", kernel_plot_script(data_file_name(ctx, "_kernel.dat"),
                                      fmt::format("projected potential, k = {}", kernel.levels)));
    }

    if (mc.relative_residual > o.mc_tolerance) {
        ctx.fail_check("minimal-coupling identity",
                       fmt::format("relative residual {} exceeds {}",
                                   format_number(mc.relative_residual),
                                   format_number(o.mc_tolerance)));
    }
}

void full_model(const RunConfig& cfg, Context& ctx) {
    const auto& o = cfg.full_model;
    const ParticleModel model = make_particle(o.particle);
    require(!o.m_used.empty(), "m-used needs at least one value");
    for (int m : o.m_used) require(m >= 2 && m <= model.eigen_count, "m-used values must lie in [2, levels]");
    require(o.cutoff >= 1, "cutoff must be >= 1");
    require(o.levels >= 1, "levels must be >= 1");
    require(o.eta >= 0.0, "eta must be >= 0");
    require(!o.omega_c || *o.omega_c > 0.0, "omega-c must be > 0");
    require(model.charge != 0.0, "charge must be nonzero");

    const MatterBasis basis = solve_particle(model);
    const double x10 = basis.x_elems(1, 0);
    require(std::abs(x10) > 1e-12, "<1|x|0> vanishes; eta cannot be mapped to q A0");
    FullModelParams fp;
    fp.omega_c = o.omega_c.value_or(basis.omega(1, 0));
    fp.a0 = o.eta / (model.charge * x10);
    fp.cutoff = o.cutoff;
    fp.x2 = o.x2 == "projected" ? X2Treatment::projected : X2Treatment::full;
    const auto rows = full_model_scan(model, basis, fp, o.m_used, o.levels);

    auto notes = particle_notes(o.particle, model);
    notes.push_back("omega_c: " + format_number(fp.omega_c));
    notes.push_back("omega_10: " + format_number(basis.omega(1, 0)));
    notes.push_back(fmt::format("eta: {} (q A0 = eta / <1|x|0> = {})", format_number(o.eta),
                                format_number(model.charge * fp.a0)));
    notes.push_back(fmt::format("Fock cutoff: {}; x^2 treatment: {}", o.cutoff, o.x2));
    notes.push_back("D_tn, C_tn: (E_n - E_0) / omega_c of the full dipole- and Coulomb-gauge models");
    notes.push_back(fmt::format("gap = max over n = 1..{} of |D_tn - C_tn|", o.levels));
    std::string text = header_lines("full-model", "hbar = 1; transitions and gap in units of omega_c",
                                    notes);
    text += "m_used,gap";
    for (int n = 1; n <= o.levels; ++n) text += fmt::format(",D_t{}", n);
    for (int n = 1; n <= o.levels; ++n) text += fmt::format(",C_t{}", n);
    text += "\n";
    for (const auto& r : rows) {
        text += fmt::format("{},{}", r.m_used, format_number(r.gap));
        for (double t : r.dipole) text += "," + format_number(t / fp.omega_c);
        for (double t : r.coulomb) text += "," + format_number(t / fp.omega_c);
        text += "\n";
    }
    ctx.output.write(text);
    if (cfg.common.emit_plots) {
        ctx.output.write_sibling(
            ".gp", csv_plot_script(ctx.output.path().filename().string(), "gaugeqed full-model",
                                   "matter levels kept", "spectral gap / omega_c", 1,
                                   {{2, "gap"}}, true));
    }
}

}  // namespace gaugeqed::cli
