#include "gaugeqed/experiments.hpp"

#include "gaugeqed/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace gaugeqed {

namespace {

bool is_dicke(ModelKind k) {
    return k == ModelKind::dicke_dipole || k == ModelKind::dicke_standard ||
           k == ModelKind::dicke_correct;
}

bool is_flux(ModelKind k) { return k == ModelKind::flux_standard || k == ModelKind::flux_correct; }

Index matter_dim(const ModelSpec& model, const SweepSpec& spec) {
    return is_dicke(model.kind) ? spec.n_dipoles + 1 : 2;
}

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(ErrorKind::validation, std::string(what) + ": cannot parse '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void validate_grid(const std::vector<double>& grid) {
    require(!grid.empty(), "eta grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require(std::isfinite(grid[i]) && grid[i] >= 0.0, "eta values must be finite and >= 0");
        if (i > 0) require(grid[i] > grid[i - 1], "eta grid must be strictly ascending");
    }
}

void validate_policy(const ConvergencePolicy& c) {
    require(c.initial_cutoff >= 1, "initial cutoff must be >= 1");
    require(c.growth > 1.0, "cutoff growth factor must be > 1");
    require(c.tolerance > 0.0, "convergence tolerance must be > 0");
    require(c.dim_cap >= 4, "dimension cap must be >= 4");
}

std::vector<double> transitions_of(const OperatorMatrix& h, int levels) {
    const Spectrum s = hermitian_eig(h, {false});
    return s.transitions(static_cast<std::size_t>(levels));
}

double max_change(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

std::string ModelSpec::label() const {
    switch (kind) {
        case ModelKind::dipole: return "D";
        case ModelKind::coulomb_standard: return "Cstd";
        case ModelKind::coulomb_correct: return "Ccorr";
        case ModelKind::coulomb_taylor: return "Taylor:" + std::to_string(taylor_order);
        case ModelKind::alpha_gauge: return "Alpha:" + format_number(alpha);
        case ModelKind::dicke_dipole: return "DickeD";
        case ModelKind::dicke_standard: return "DickeCstd";
        case ModelKind::dicke_correct: return "DickeCcorr";
        case ModelKind::flux_standard: return "FluxCstd";
        case ModelKind::flux_correct: return "FluxCcorr";
    }
    return "?";
}

ModelSpec ModelSpec::parse(std::string_view text) {
    text = trim(text);
    ModelSpec m;
    if (text == "D") m.kind = ModelKind::dipole;
    else if (text == "Cstd") m.kind = ModelKind::coulomb_standard;
    else if (text == "Ccorr") m.kind = ModelKind::coulomb_correct;
    else if (text == "DickeD") m.kind = ModelKind::dicke_dipole;
    else if (text == "DickeCstd") m.kind = ModelKind::dicke_standard;
    else if (text == "DickeCcorr") m.kind = ModelKind::dicke_correct;
    else if (text == "FluxCstd") m.kind = ModelKind::flux_standard;
    else if (text == "FluxCcorr") m.kind = ModelKind::flux_correct;
    else if (text.starts_with("Taylor:")) {
        m.kind = ModelKind::coulomb_taylor;
        const double order = parse_double(text.substr(7), "Taylor order");
        require(order >= 1 && order <= 1000 && order == std::floor(order),
                "Taylor order must be an integer in [1, 1000]");
        m.taylor_order = static_cast<int>(order);
    } else if (text.starts_with("Alpha:")) {
        m.kind = ModelKind::alpha_gauge;
        m.alpha = parse_double(text.substr(6), "alpha");
        require(m.alpha >= 0.0 && m.alpha <= 1.0, "alpha must lie in [0, 1]");
    } else {
        fail(ErrorKind::validation, "unknown model '" + std::string(text) + "'");
    }
    return m;
}

std::vector<ModelSpec> parse_models(std::string_view list) {
    std::vector<ModelSpec> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        out.push_back(ModelSpec::parse(list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    require(!out.empty(), "model list must not be empty");
    return out;
}

std::vector<double> eta_range(double eta_max, double step) {
    require(eta_max >= 0.0 && std::isfinite(eta_max), "eta_max must be finite and >= 0");
    require(step > 0.0, "eta step must be > 0");
    std::vector<double> grid;
    const auto count = static_cast<long>(std::floor(eta_max / step + 1e-9));
    for (long k = 0; k <= count; ++k) grid.push_back(static_cast<double>(k) * step);
    return grid;
}

void SweepSpec::validate() const {
    require(!models.empty(), "sweep needs at least one model");
    validate_grid(eta_grid);
    require(omega_c > 0.0, "omega_c must be > 0");
    require(levels_reported >= 2, "levels_reported must be >= 2");
    require(n_dipoles >= 1, "n_dipoles must be >= 1");
    require(threads >= 1, "threads must be >= 1");
    validate_policy(convergence);
    bool needs_flux = false;
    for (const auto& m : models) {
        needs_flux = needs_flux || is_flux(m.kind);
        if (m.kind == ModelKind::coulomb_taylor) {
            require(m.taylor_order >= 1 && m.taylor_order <= 1000, "Taylor order must lie in [1, 1000]");
        }
    }
    if (needs_flux) {
        require(fluxonium.has_value(), "fluxonium models need fluxonium parameters");
        fluxonium->validate();
    } else {
        require(omega_c + detuning > 0.0, "omega_10 = omega_c + detuning must be > 0");
    }
}

std::vector<SweepPoint> SweepResult::for_model(const std::string& label) const {
    std::vector<SweepPoint> out;
    for (const auto& p : points) {
        if (p.model.label() == label) out.push_back(p);
    }
    return out;
}

bool SweepResult::all_converged() const {
    return std::all_of(points.begin(), points.end(), [](const SweepPoint& p) { return p.converged; });
}

OperatorMatrix build_model(const ModelSpec& model, const SweepSpec& spec, double eta, int cutoff,
                           const FluxoniumBasis* flux_basis) {
    RabiParams r;
    r.omega_c = spec.omega_c;
    r.omega_10 = spec.omega_c + spec.detuning;
    r.eta = eta;
    r.cutoff = cutoff;
    DickeParams d{spec.n_dipoles, r};

    switch (model.kind) {
        case ModelKind::dipole: return build_H_D(r);
        case ModelKind::coulomb_standard: return build_H_C_standard(r);
        case ModelKind::coulomb_correct: return build_H_C_correct(r, CoulombMethod::closed_form);
        case ModelKind::coulomb_taylor: return build_H_C_taylor(r, model.taylor_order);
        case ModelKind::alpha_gauge: return build_H_alpha(r, GaugeParam{model.alpha});
        case ModelKind::dicke_dipole: return build_dicke_dipole(d);
        case ModelKind::dicke_standard: return build_dicke_standard(d);
        case ModelKind::dicke_correct: return build_dicke_correct(d, DickeMethod::closed_form);
        case ModelKind::flux_standard:
        case ModelKind::flux_correct: {
            require(spec.fluxonium.has_value() && flux_basis != nullptr,
                    "fluxonium models need a solved fluxonium basis");
            FluxoniumParams fp = *spec.fluxonium;
            fp.omega_c = spec.omega_c;
            fp.cutoff = cutoff;
            fp.chi0 = eta / flux_basis->phi_10();
            return model.kind == ModelKind::flux_standard
                       ? build_flux_charge_standard(fp, *flux_basis)
                       : build_flux_charge_correct(fp, *flux_basis);
        }
    }
    fail(ErrorKind::validation, "unhandled model kind");
}

SweepPoint converge_point(const ModelSpec& model, const SweepSpec& spec, double eta,
                          const FluxoniumBasis* flux_basis) {
    const ConvergencePolicy& policy = spec.convergence;
    const Index mdim = matter_dim(model, spec);
    const auto fits = [&](int cutoff) { return mdim * (cutoff + 1) <= policy.dim_cap; };
    require(fits(policy.initial_cutoff), "initial cutoff already exceeds the dimension cap");

    SweepPoint point;
    point.model = model;
    point.eta = eta;
    int cutoff = policy.initial_cutoff;
    std::vector<double> current =
        transitions_of(build_model(model, spec, eta, cutoff, flux_basis), spec.levels_reported);
    point.trail.push_back({cutoff, 0.0});
    while (true) {
        const int next = std::max(cutoff + 1, static_cast<int>(std::ceil(cutoff * policy.growth)));
        if (!fits(next)) break;
        std::vector<double> refined =
            transitions_of(build_model(model, spec, eta, next, flux_basis), spec.levels_reported);
        const double change = max_change(current, refined);
        point.trail.push_back({next, change});
        cutoff = next;
        current = std::move(refined);
        if (change <= policy.tolerance) {
            point.converged = true;
            break;
        }
    }
    point.cutoff = cutoff;
    point.transitions = std::move(current);
    return point;
}

void parallel_for(int count, int threads, const std::function<void(int)>& task) {
    if (count <= 0) return;
    const int workers = std::clamp(threads, 1, count);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    const auto work = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    // Report the failure with the lowest index so errors do not depend on scheduling.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::optional<FluxoniumBasis> flux_basis;
    const bool needs_flux = std::any_of(spec.models.begin(), spec.models.end(),
                                        [](const ModelSpec& m) { return is_flux(m.kind); });
    if (needs_flux) flux_basis = solve_fluxonium(*spec.fluxonium);

    SweepResult result;
    result.omega_c = spec.omega_c;
    result.omega_10 = flux_basis ? flux_basis->omega_10() : spec.omega_c + spec.detuning;
    result.levels_reported = spec.levels_reported;
    const int n_eta = static_cast<int>(spec.eta_grid.size());
    const int total = static_cast<int>(spec.models.size()) * n_eta;
    result.points.resize(static_cast<std::size_t>(total));
    const FluxoniumBasis* basis_ptr = flux_basis ? &*flux_basis : nullptr;
    parallel_for(total, spec.threads, [&](int i) {
        const ModelSpec& model = spec.models[static_cast<std::size_t>(i / n_eta)];
        const double eta = spec.eta_grid[static_cast<std::size_t>(i % n_eta)];
        result.points[static_cast<std::size_t>(i)] = converge_point(model, spec, eta, basis_ptr);
    });
    return result;
}

void TaylorStudySpec::validate() const {
    require(omega_c > 0.0, "omega_c must be > 0");
    require(omega_c + detuning > 0.0, "omega_10 = omega_c + detuning must be > 0");
    require(cutoff >= 1, "cutoff must be >= 1");
    require(!orders.empty(), "Taylor study needs at least one order");
    for (int n : orders) require(n >= 1 && n <= 1000, "Taylor orders must lie in [1, 1000]");
    validate_grid(eta_grid);
    require(levels_compared >= 1 && levels_compared < 2 * (cutoff + 1),
            "levels_compared out of range");
    require(accuracy > 0.0 && breakdown > 0.0, "error thresholds must be > 0");
    require(threads >= 1, "threads must be >= 1");
}

const TaylorRow& TaylorStudyResult::row(int order) const {
    for (const auto& r : rows) {
        if (r.order == order) return r;
    }
    fail(ErrorKind::validation, "order " + std::to_string(order) + " not in the study");
}

TaylorStudyResult taylor_study(const TaylorStudySpec& spec) {
    spec.validate();
    const int n_eta = static_cast<int>(spec.eta_grid.size());
    const std::size_t n_orders = spec.orders.size();
    std::vector<std::vector<double>> errors(n_orders, std::vector<double>(spec.eta_grid.size()));

    parallel_for(n_eta, spec.threads, [&](int e) {
        RabiParams r;
        r.omega_c = spec.omega_c;
        r.omega_10 = spec.omega_c + spec.detuning;
        r.eta = spec.eta_grid[static_cast<std::size_t>(e)];
        r.cutoff = spec.cutoff;
        const auto exact = transitions_of(build_H_C_correct(r), spec.levels_compared);
        for (std::size_t k = 0; k < n_orders; ++k) {
            const auto approx = transitions_of(build_H_C_taylor(r, spec.orders[k]),
                                               spec.levels_compared);
            double worst = 0.0;
            for (std::size_t n = 0; n < exact.size(); ++n) {
                const double denom = std::max(std::abs(exact[n]), spec.omega_c);
                worst = std::max(worst, std::abs(approx[n] - exact[n]) / denom);
            }
            errors[k][static_cast<std::size_t>(e)] = worst;
        }
    });

    TaylorStudyResult result;
    result.eta_grid = spec.eta_grid;
    result.cutoff = spec.cutoff;
    for (std::size_t k = 0; k < n_orders; ++k) {
        TaylorRow row;
        row.order = spec.orders[k];
        row.errors = std::move(errors[k]);
        for (std::size_t e = 0; e < row.errors.size(); ++e) {
            if (row.errors[e] > spec.accuracy) break;
            row.threshold = spec.eta_grid[e];
        }
        for (std::size_t e = 0; e < row.errors.size(); ++e) {
            if (row.errors[e] > spec.breakdown) {
                row.breakdown_eta = spec.eta_grid[e];
                break;
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

void AlphaStudySpec::validate() const {
    require(omega_c > 0.0, "omega_c must be > 0");
    require(omega_c + detuning > 0.0, "omega_10 = omega_c + detuning must be > 0");
    require(!alphas.empty(), "alpha set must not be empty");
    for (double a : alphas) require(a >= 0.0 && a <= 1.0, "alphas must lie in [0, 1]");
    validate_grid(eta_grid);
    require(levels_reported >= 2, "levels_reported must be >= 2");
    require(threads >= 1, "threads must be >= 1");
    validate_policy(convergence);
}

AlphaStudyResult alpha_invariance_study(const AlphaStudySpec& spec) {
    spec.validate();
    SweepSpec sweep;
    sweep.omega_c = spec.omega_c;
    sweep.detuning = spec.detuning;
    sweep.levels_reported = spec.levels_reported;
    sweep.convergence = spec.convergence;
    for (double a : spec.alphas) {
        ModelSpec m;
        if (a == 1.0 && spec.substitute_standard) {
            m.kind = ModelKind::coulomb_standard;
        } else {
            m.kind = ModelKind::alpha_gauge;
            m.alpha = a;
        }
        sweep.models.push_back(m);
    }
    sweep.eta_grid = spec.eta_grid;
    sweep.threads = spec.threads;
    const SweepResult sweep_result = run_sweep(sweep);

    for (const auto& p : sweep_result.points) {
        if (!p.converged) {
            fail(ErrorKind::cutoff_ceiling, "model " + p.model.label() + " at eta " +
                                                format_number(p.eta) +
                                                " did not converge below the dimension cap");
        }
    }

    const std::size_t n_eta = spec.eta_grid.size();
    AlphaStudyResult result;
    result.eta_grid = spec.eta_grid;
    result.spreads.assign(n_eta, 0.0);
    for (std::size_t e = 0; e < n_eta; ++e) {
        const auto& first = sweep_result.points[e].transitions;
        for (std::size_t n = 0; n < first.size(); ++n) {
            double lo = first[n];
            double hi = first[n];
            for (std::size_t m = 1; m < spec.alphas.size(); ++m) {
                const double t = sweep_result.points[m * n_eta + e].transitions[n];
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            const double spread = hi - lo;
            result.spreads[e] = std::max(result.spreads[e], spread);
            if (spread > result.max_spread) {
                result.max_spread = spread;
                result.worst_eta = spec.eta_grid[e];
                result.worst_level = static_cast<int>(n) + 1;
            }
        }
    }
    return result;
}

}  // namespace gaugeqed
