#include "commands.hpp"
#include "config.hpp"
#include "gaugeqed/cli.hpp"
#include "gaugeqed/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <functional>
#include <memory>
#include <vector>
#include <ostream>

namespace gaugeqed::cli {

namespace {

void add_convergence(CLI::App& sub, ConvergenceOptions& c) {
    sub.add_option("--initial-cutoff", c.initial_cutoff, "First Fock cutoff tried per point")
        ->capture_default_str();
    sub.add_option("--growth", c.growth, "Cutoff growth factor between attempts")
        ->capture_default_str();
    sub.add_option("--tolerance", c.tolerance,
                   "Max transition change (units of omega_c) accepted as converged")
        ->capture_default_str();
    sub.add_option("--dim-cap", c.dim_cap, "Largest Hilbert-space dimension tried")
        ->capture_default_str();
}

void add_sweep(CLI::App& sub, SweepOptions& s, const std::string& model_help) {
    sub.add_option("--eta-max", s.eta_max, "Largest normalized coupling eta")
        ->capture_default_str();
    sub.add_option("--eta-step", s.eta_step, "Coupling grid step")->capture_default_str();
    sub.add_option("--levels", s.levels, "Transitions reported per point")->capture_default_str();
    sub.add_option("--models", s.models, model_help)->delimiter(',')->capture_default_str();
    add_convergence(sub, s.convergence);
}

void add_particle(CLI::App& sub, ParticleOptions& p) {
    sub.add_option("--potential", p.potential, "Preset potential or tabulated file")
        ->check(CLI::IsMember({"double_well", "harmonic", "table"}))
        ->capture_default_str();
    sub.add_option("--table", p.table, "Two-column 'x V' file for --potential table");
    sub.add_option("--mu", p.mu, "Double well: V = -mu x^2 + lambda x^4")->capture_default_str();
    sub.add_option("--lambda", p.lambda, "Double-well quartic coefficient")->capture_default_str();
    sub.add_option("--omega0", p.omega0, "Harmonic frequency")->capture_default_str();
    sub.add_option("--mass", p.mass, "Particle mass")->capture_default_str();
    sub.add_option("--charge", p.charge, "Particle charge q")->capture_default_str();
    sub.add_option("--x-min", p.x_min, "Grid start (preset default when unset)");
    sub.add_option("--x-max", p.x_max, "Grid end (preset default when unset)");
    sub.add_option("--points", p.points, "Grid points (preset default when unset)");
    sub.add_option("--levels", p.levels, "Particle eigenstates kept, M (10 for harmonic, else 50)");
}

using Handler = void (*)(const RunConfig&, Context&);

struct Parsed {
    std::unique_ptr<CLI::App> app;
    struct Entry {
        CLI::App* app;
        std::string name;
        Handler handler;
    };
    std::vector<Entry> subcommands;  // registration order
};

Parsed make_app(RunConfig& cfg) {
    Parsed p;
    p.app = std::make_unique<CLI::App>(
        "Gauge-consistent light-matter Hamiltonians: sweeps, studies and identity checks.",
        "gaugeqed");
    CLI::App& app = *p.app;
    app.set_config("--config", "", "INI file: top-level keys and one [subcommand] section");
    app.allow_config_extras(false);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", cfg.common.threads, "Worker threads for grid points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", cfg.common.out,
                   "Output file (default: stdout, or $GAUGEQED_OUT_DIR/<subcommand>.csv)");
    app.add_flag("--emit-plots", cfg.common.emit_plots,
                 "Also write a gnuplot script (and table) next to --out");

    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->configurable();  // a [name] section in --config selects the subcommand
        p.subcommands.push_back({sub, name, h});
        return sub;
    };

    {
        auto& c = cfg.rabi_sweep;
        CLI::App* sub = add("rabi-sweep", "Two-level spectra against eta for the Rabi gauge family",
                            rabi_sweep);
        sub->add_option("--detuning", c.sweep.detuning, "(omega_10 - omega_c) / omega_c")
            ->capture_default_str();
        add_sweep(*sub, c.sweep, "Comma list of D, Cstd, Ccorr, Taylor:<n>, Alpha:<a>");
    }
    {
        auto& c = cfg.dicke_sweep;
        CLI::App* sub = add("dicke-sweep", "N-dipole spectra against eta", dicke_sweep);
        sub->add_option("--detuning", c.sweep.detuning, "(omega_10 - omega_c) / omega_c")
            ->capture_default_str();
        sub->add_option("--n-dipoles", c.n_dipoles, "Number of dipoles N")->capture_default_str();
        add_sweep(*sub, c.sweep, "Comma list of DickeD, DickeCstd, DickeCcorr");
    }
    {
        auto& c = cfg.taylor;
        CLI::App* sub = add("taylor-study",
                            "Error of order-n truncated expansions of the Coulomb-gauge model",
                            taylor_study);
        sub->add_option("--eta-max", c.eta_max, "Largest coupling")->capture_default_str();
        sub->add_option("--eta-step", c.eta_step, "Coupling grid step")->capture_default_str();
        sub->add_option("--detuning", c.detuning, "(omega_10 - omega_c) / omega_c")
            ->capture_default_str();
        sub->add_option("--cutoff", c.cutoff, "Fixed Fock cutoff")->capture_default_str();
        sub->add_option("--orders", c.orders, "Comma list of expansion orders")
            ->delimiter(',')
            ->capture_default_str();
        sub->add_option("--levels", c.levels, "Transitions compared")->capture_default_str();
        sub->add_option("--accuracy", c.accuracy, "Relative error defining the threshold")
            ->capture_default_str();
        sub->add_option("--breakdown", c.breakdown, "Relative error reported as breakdown")
            ->capture_default_str();
    }
    {
        auto& c = cfg.alpha;
        CLI::App* sub =
            add("alpha-check", "Spectral spread across the alpha-gauge family", alpha_check);
        sub->add_option("--alphas", c.alphas, "Comma list of alpha values in [0, 1]")
            ->delimiter(',')
            ->capture_default_str();
        sub->add_option("--eta", c.eta, "Single coupling; replaces the eta grid when set");
        sub->add_option("--eta-max", c.eta_max, "Largest coupling")->capture_default_str();
        sub->add_option("--eta-step", c.eta_step, "Coupling grid step")->capture_default_str();
        sub->add_option("--detuning", c.detuning, "(omega_10 - omega_c) / omega_c")
            ->capture_default_str();
        sub->add_option("--levels", c.levels, "Transitions compared")->capture_default_str();
        sub->add_option("--max-spread", c.max_spread, "PASS threshold, units of omega_c")
            ->capture_default_str();
        sub->add_flag("--substitute-standard", c.substitute_standard,
                      "Negative control: use Cstd in place of alpha = 1");
        add_convergence(*sub, c.convergence);
    }
    {
        auto& c = cfg.gauge;
        CLI::App* sub = add("gauge-theorem",
                            "Matrix identity U H_D U^dag = H_C against the Fock cutoff",
                            gauge_theorem);
        sub->add_option("--eta", c.eta, "Coupling")->capture_default_str();
        sub->add_option("--detuning", c.detuning, "(omega_10 - omega_c) / omega_c")
            ->capture_default_str();
        sub->add_option("--cutoffs", c.cutoffs, "Comma list of Fock cutoffs")
            ->delimiter(',')
            ->capture_default_str();
        sub->add_option("--interior", c.interior,
                        "Fock levels in the interior block (default 80% of cutoff + 1)");
        sub->add_option("--tolerance", c.tolerance, "Interior-block PASS threshold")
            ->capture_default_str();
    }
    {
        auto& c = cfg.fluxonium;
        CLI::App* sub = add("fluxonium",
                            "Fluxonium coupled to an LC oscillator in the charge gauge", fluxonium);
        sub->add_option("--ec", c.e_c, "Charging energy E_C (units of omega_c)")
            ->capture_default_str();
        sub->add_option("--el", c.e_l, "Inductive energy E_L")->capture_default_str();
        sub->add_option("--ej", c.e_j, "Josephson energy E_J")->capture_default_str();
        sub->add_option("--basis-size", c.basis_size, "Oscillator states for the qubit solver")
            ->capture_default_str();
        sub->add_option("--check-tolerance", c.check_tolerance,
                        "Closed form vs conjugation PASS threshold")
            ->capture_default_str();
        add_sweep(*sub, c.sweep, "Comma list of FluxCstd, FluxCcorr");
    }
    {
        auto& c = cfg.particle_demo;
        CLI::App* sub = add("particle-demo",
                            "Grid particle: nonlocal kernel, minimal-coupling identity, TRK sum",
                            particle_demo);
        add_particle(*sub, c.particle);
        sub->add_option("--kernel-levels", c.kernel_levels,
                        "Comma list of projection sizes k (default powers of two up to M)")
            ->delimiter(',');
        sub->add_option("--kernel-width", c.kernel_width, "Distance defining off-diagonal weight")
            ->capture_default_str();
        sub->add_option("--a0", c.a0, "Vector-potential amplitude A0")->capture_default_str();
        sub->add_option("--subspace-levels", c.subspace_levels,
                        "Low-energy block used for the relative residual")
            ->capture_default_str();
        sub->add_option("--trk-levels", c.trk_levels,
                        "Comma list of level counts for the TRK sum (default 2,10,M)")
            ->delimiter(',');
        sub->add_option("--mc-tolerance", c.mc_tolerance, "Relative-residual PASS threshold")
            ->capture_default_str();
    }
    {
        auto& c = cfg.full_model;
        CLI::App* sub = add("full-model",
                            "Full dipole vs Coulomb gauge models against matter levels kept",
                            full_model);
        add_particle(*sub, c.particle);
        sub->add_option("--eta", c.eta, "Coupling q A0 <1|x|0>")->capture_default_str();
        sub->add_option("--omega-c", c.omega_c, "Cavity frequency, raw units (default omega_10)");
        sub->add_option("--m-used", c.m_used, "Comma list of matter levels kept")
            ->delimiter(',')
            ->capture_default_str();
        sub->add_option("--cutoff", c.cutoff, "Fock cutoff")->capture_default_str();
        sub->add_option("--x2", c.x2, "x^2 from the grid or squared projected x")
            ->check(CLI::IsMember({"full", "projected"}))
            ->capture_default_str();
        sub->add_option("--transitions", c.levels, "Transitions compared")->capture_default_str();
    }
    return p;
}

}  // namespace

int run(const std::vector<std::string>& args, const Environment& env) {
    RunConfig cfg;
    Parsed parsed = make_app(cfg);
    CLI::App& app = *parsed.app;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, env.out, env.err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, env.out, env.err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, env.out, env.err);
        return exit_validation;
    }

    Handler handler = nullptr;
    std::vector<std::string> selected;
    for (const auto& entry : parsed.subcommands) {
        if (entry.app->parsed()) {
            selected.push_back(entry.name);
            cfg.subcommand = entry.name;
            handler = entry.handler;
        }
    }
    if (selected.size() != 1) {
        std::string names;
        for (const auto& n : selected) names += " " + n;
        fmt::print(env.err, "validation error: exactly one subcommand expected, got{}\n",
                   names.empty() ? std::string(" none") : names);
        return exit_validation;
    }

    try {
        Context ctx{env, OutputTarget(cfg.common.out, cfg.subcommand, env), {}};
        require(!cfg.common.emit_plots || ctx.output.is_file(),
                "--emit-plots needs a file output (--out or GAUGEQED_OUT_DIR)");
        handler(cfg, ctx);
        for (const auto& f : ctx.failures) {
            fmt::print(env.err, "numerical failure [{}]: {}\n", f.invariant, f.detail);
        }
        return ctx.failures.empty() ? exit_success : exit_numerical;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::validation) {
            fmt::print(env.err, "validation error: {}\n", e.detail());
            return exit_validation;
        }
        fmt::print(env.err, "numerical failure [{}]: {}\n", to_string(e.kind()), e.detail());
        return exit_numerical;
    }
}

}  // namespace gaugeqed::cli
