#include "gaugeqed/particle1d.hpp"

#include "gaugeqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace gaugeqed {

namespace {

constexpr int min_grid_points = 201;

// 4th-order central second derivative, offsets 0..2.
constexpr double d2_stencil[3] = {-5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0};
// 4th-order central first derivative, offsets 1..2 (antisymmetric).
constexpr double d1_stencil[3] = {0.0, 2.0 / 3.0, -1.0 / 12.0};

std::vector<double> sample(const Grid& grid, const auto& f) {
    std::vector<double> v(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) v[static_cast<std::size_t>(i)] = f(grid.x(i));
    return v;
}

RMatrix grid_hamiltonian(const Grid& grid, const std::vector<double>& potential, double mass) {
    RMatrix h = kinetic_matrix(grid, mass);
    for (int i = 0; i < grid.n_points; ++i) h(i, i) += potential[static_cast<std::size_t>(i)];
    return h;
}

// Sign convention: the outermost lobe on the right (first component above
// 1e-3 of the peak, scanning from x_max) is positive.
void fix_lobe_signs(RMatrix& vectors) {
    for (Index k = 0; k < vectors.cols(); ++k) {
        const double peak = vectors.col(k).cwiseAbs().maxCoeff();
        for (Index i = vectors.rows() - 1; i >= 0; --i) {
            if (std::abs(vectors(i, k)) > 1e-3 * peak) {
                if (vectors(i, k) < 0.0) vectors.col(k) *= -1.0;
                break;
            }
        }
    }
}

void check_refinement(const ParticleModel& model, const Eigen::VectorXd& fine,
                      const SolveOptions& options) {
    const int n = model.grid.n_points;
    if (n % 2 == 0) return;  // no nested coarse grid
    Grid coarse = model.grid;
    coarse.n_points = (n + 1) / 2;
    std::vector<double> coarse_v(static_cast<std::size_t>(coarse.n_points));
    for (int i = 0; i < coarse.n_points; ++i) {
        coarse_v[static_cast<std::size_t>(i)] = model.potential[static_cast<std::size_t>(2 * i)];
    }
    const auto coarse_eig =
        symmetric_eig(grid_hamiltonian(coarse, coarse_v, model.mass), false).values;
    const int checked = std::min<int>({options.checked_levels, model.eigen_count,
                                       static_cast<int>(coarse_eig.size())});
    for (int k = 0; k < checked; ++k) {
        const double estimate = std::abs(fine(k) - coarse_eig(k)) / 15.0;
        if (estimate > options.refinement_tolerance * std::max(1.0, std::abs(fine(k)))) {
            std::ostringstream msg;
            msg << "level " << k << " shifts by " << std::abs(fine(k) - coarse_eig(k))
                << " between spacing " << coarse.spacing() << " and " << model.grid.spacing();
            fail(ErrorKind::grid_too_coarse, msg.str());
        }
    }
}

void check_boundary(const RMatrix& vectors, double tolerance) {
    const Index last = vectors.rows() - 1;
    for (Index k = 0; k < vectors.cols(); ++k) {
        const double peak = vectors.col(k).cwiseAbs().maxCoeff();
        const double edge = std::max(std::abs(vectors(0, k)), std::abs(vectors(last, k)));
        if (edge > tolerance * peak) {
            std::ostringstream msg;
            msg << "level " << k << " has relative amplitude " << edge / peak
                << " at the grid boundary";
            fail(ErrorKind::boundary_leak, msg.str());
        }
    }
}

RMatrix weighted_elements(const RMatrix& v, const std::vector<double>& weights) {
    const Eigen::Map<const Eigen::VectorXd> w(weights.data(), static_cast<Index>(weights.size()));
    RMatrix m = v.transpose() * w.asDiagonal() * v;
    return 0.5 * (m + m.transpose());
}

}  // namespace

std::vector<double> Grid::points() const {
    return sample(*this, [](double x) { return x; });
}

void ParticleModel::validate() const {
    require(grid.n_points >= min_grid_points, "particle grid needs at least 201 points");
    require(grid.x_max > grid.x_min, "particle grid needs x_max > x_min");
    require(static_cast<int>(potential.size()) == grid.n_points,
            "potential must have one sample per grid point");
    require(mass > 0.0, "particle mass must be > 0");
    require(eigen_count >= 1 && eigen_count < grid.n_points,
            "eigen_count must lie in [1, n_points)");
    for (double v : potential) require(std::isfinite(v), "potential samples must be finite");
}

ParticleModel ParticleModel::harmonic(double omega0, double mass, Grid grid, int eigen_count) {
    require(omega0 > 0.0, "harmonic omega0 must be > 0");
    ParticleModel m;
    m.grid = grid;
    m.mass = mass;
    m.eigen_count = eigen_count;
    m.name = "harmonic";
    m.potential = sample(grid, [&](double x) { return 0.5 * mass * omega0 * omega0 * x * x; });
    m.validate();
    return m;
}

ParticleModel ParticleModel::double_well(double mu, double lambda, double mass, Grid grid,
                                         int eigen_count) {
    require(lambda > 0.0, "double-well lambda must be > 0");
    ParticleModel m;
    m.grid = grid;
    m.mass = mass;
    m.eigen_count = eigen_count;
    m.name = "double_well";
    m.potential = sample(grid, [&](double x) { return -mu * x * x + lambda * x * x * x * x; });
    m.validate();
    return m;
}

ParticleModel ParticleModel::from_table(std::istream& in, double mass, int eigen_count) {
    std::vector<double> xs;
    std::vector<double> vs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double x = 0.0;
        double v = 0.0;
        if (!(fields >> x)) continue;
        if (!(fields >> v)) {
            fail(ErrorKind::validation, "potential table line " + std::to_string(line_no) +
                                            ": expected two columns");
        }
        require(xs.empty() || x > xs.back(), "potential table x values must be ascending");
        xs.push_back(x);
        vs.push_back(v);
    }
    require(static_cast<int>(xs.size()) >= min_grid_points,
            "potential table needs at least 201 samples");

    ParticleModel m;
    m.grid = Grid{xs.front(), xs.back(), static_cast<int>(xs.size())};
    m.mass = mass;
    m.eigen_count = eigen_count;
    m.name = "table";
    m.potential.resize(xs.size());
    std::size_t seg = 0;
    for (int i = 0; i < m.grid.n_points; ++i) {
        const double x = m.grid.x(i);
        while (seg + 2 < xs.size() && xs[seg + 1] < x) ++seg;
        const double t = std::clamp((x - xs[seg]) / (xs[seg + 1] - xs[seg]), 0.0, 1.0);
        m.potential[static_cast<std::size_t>(i)] = vs[seg] + t * (vs[seg + 1] - vs[seg]);
    }
    m.validate();
    return m;
}

RMatrix kinetic_matrix(const Grid& grid, double mass) {
    const int n = grid.n_points;
    const double scale = -1.0 / (2.0 * mass * grid.spacing() * grid.spacing());
    RMatrix t = RMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int off = -2; off <= 2; ++off) {
            const int j = i + off;
            if (j < 0 || j >= n) continue;
            t(i, j) = scale * d2_stencil[std::abs(off)];
        }
    }
    return t;
}

CMatrix momentum_matrix(const Grid& grid) {
    const int n = grid.n_points;
    const double inv_h = 1.0 / grid.spacing();
    CMatrix p = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int off = 1; off <= 2; ++off) {
            const Complex c(0.0, -d1_stencil[off] * inv_h);
            if (i + off < n) p(i, i + off) = c;
            if (i - off >= 0) p(i, i - off) = -c;
        }
    }
    return p;
}

MatterBasis solve_particle(const ParticleModel& model, const SolveOptions& options) {
    model.validate();
    const auto eig = symmetric_eig(grid_hamiltonian(model.grid, model.potential, model.mass), true);
    const int m = model.eigen_count;
    RMatrix v = eig.vectors.leftCols(m);
    // A box that is too narrow also spoils the refinement estimate, so check it first.
    check_boundary(v, options.boundary_tolerance);
    if (options.refinement_check) check_refinement(model, eig.values, options);
    fix_lobe_signs(v);

    const std::vector<double> xs = model.grid.points();
    std::vector<double> x2(xs.size());
    std::transform(xs.begin(), xs.end(), x2.begin(), [](double x) { return x * x; });

    MatterBasis basis;
    basis.energies.assign(eig.values.data(), eig.values.data() + m);
    basis.x_elems = weighted_elements(v, xs);
    basis.x2_elems = weighted_elements(v, x2);
    const CMatrix p_full = v.cast<Complex>().transpose() * momentum_matrix(model.grid) * v;
    // Real eigenvectors and a purely imaginary antisymmetric stencil.
    const RMatrix p_imag = p_full.imag();
    basis.p_elems = Complex(0.0, 1.0) * (0.5 * (p_imag - p_imag.transpose())).cast<Complex>();
    basis.wavefunctions = v / std::sqrt(model.grid.spacing());
    return basis;
}

NonlocalKernel nonlocal_kernel(const MatterBasis& basis, const ParticleModel& model, int levels,
                               double width) {
    require(levels >= 1 && levels <= basis.levels(), "kernel levels must lie in [1, M]");
    require(width >= 0.0, "kernel width must be >= 0");
    const double h = model.grid.spacing();
    const RMatrix psi = basis.wavefunctions.leftCols(levels);
    const Eigen::Map<const Eigen::VectorXd> w(model.potential.data(),
                                              static_cast<Index>(model.potential.size()));
    const RMatrix w_proj = h * (psi.transpose() * w.asDiagonal() * psi);
    RMatrix kernel = psi * w_proj * psi.transpose();
    kernel = 0.5 * (kernel + kernel.transpose()).eval();

    NonlocalKernel out;
    out.levels = levels;
    out.width = width;
    double total = 0.0;
    double off = 0.0;
    for (Index i = 0; i < kernel.rows(); ++i) {
        for (Index j = 0; j < kernel.cols(); ++j) {
            const double sq = kernel(i, j) * kernel(i, j);
            total += sq;
            if (std::abs(model.grid.x(static_cast<int>(i)) - model.grid.x(static_cast<int>(j))) >
                width) {
                off += sq;
            }
        }
    }
    out.off_diagonality = total > 0.0 ? off / total : 0.0;
    out.values = std::move(kernel);
    return out;
}

MinimalCouplingReport check_minimal_coupling_identity(const ParticleModel& model, double a0,
                                                      int subspace_levels, bool spectral_check) {
    model.validate();
    require(std::isfinite(a0), "A0 must be finite");
    require(subspace_levels >= 1 && subspace_levels < model.grid.n_points,
            "subspace_levels must lie in [1, n_points)");
    const int n = model.grid.n_points;
    const double lambda = model.charge * a0;
    const RMatrix h0 = grid_hamiltonian(model.grid, model.potential, model.mass);

    CMatrix phased(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            phased(i, j) = h0(i, j) * std::polar(1.0, lambda * (model.grid.x(i) - model.grid.x(j)));
        }
    }
    CMatrix direct = h0.cast<Complex>() - (lambda / model.mass) * momentum_matrix(model.grid);
    direct.diagonal().array() += lambda * lambda / (2.0 * model.mass);

    const CMatrix diff = phased - direct;
    MinimalCouplingReport report;
    report.subspace_levels = subspace_levels;
    report.raw_residual = diff.cwiseAbs().maxCoeff();

    const auto eig = symmetric_eig(h0, true);
    const CMatrix v = eig.vectors.leftCols(subspace_levels).cast<Complex>();
    report.subspace_residual = (v.adjoint() * diff * v).cwiseAbs().maxCoeff();
    const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(subspace_levels - 1)));
    report.relative_residual = report.subspace_residual / std::max(scale, 1e-300);

    if (spectral_check) {
        const Spectrum conj = hermitian_eig(
            OperatorMatrix(CMatrix(0.5 * (phased + phased.adjoint())), true), {false});
        const std::vector<double> bare(eig.values.data(), eig.values.data() + eig.values.size());
        report.spectral_residual = spectral_distance(conj.eigenvalues, bare);
    }
    return report;
}

namespace {

struct MatterBlock {
    OperatorMatrix h0;
    OperatorMatrix x;
    OperatorMatrix x2;
    OperatorMatrix p;
};

MatterBlock matter_block(const ParticleModel& model, const MatterBasis& basis,
                         const FullModelParams& params) {
    require(params.omega_c > 0.0, "omega_c must be > 0");
    require(params.cutoff >= 1, "cutoff must be >= 1");
    require(params.m_used >= 2 && params.m_used <= basis.levels(),
            "m_used must lie in [2, M]");
    require(std::isfinite(params.a0), "A0 must be finite");
    (void)model;
    const Index m = params.m_used;
    const RMatrix x = basis.x_elems.topLeftCorner(m, m);
    const RMatrix x2 =
        params.x2 == X2Treatment::full ? RMatrix(basis.x2_elems.topLeftCorner(m, m)) : RMatrix(x * x);
    return {OperatorMatrix::diagonal(std::vector<double>(basis.energies.begin(),
                                                         basis.energies.begin() + m)),
            OperatorMatrix(x, true), OperatorMatrix(RMatrix(0.5 * (x2 + x2.transpose())), true),
            OperatorMatrix(CMatrix(basis.p_elems.topLeftCorner(m, m)), true)};
}

}  // namespace

OperatorMatrix build_full_H_D(const ParticleModel& model, const MatterBasis& basis,
                              const FullModelParams& params) {
    const MatterBlock mb = matter_block(model, basis, params);
    const FockSpace field{params.cutoff};
    const FockOperators f = fock_ops(field);
    const OperatorMatrix id_m = OperatorMatrix::identity(mb.h0.dim());
    const OperatorMatrix id_f = OperatorMatrix::identity(field.dim());
    const double qa = model.charge * params.a0;
    return params.omega_c * kron(id_m, f.n) + kron(mb.h0, id_f) +
           (qa * qa * params.omega_c) * kron(mb.x2, id_f) +
           Complex(0.0, qa * params.omega_c) * kron(mb.x, f.a_dag - f.a);
}

OperatorMatrix build_full_H_C(const ParticleModel& model, const MatterBasis& basis,
                              const FullModelParams& params) {
    const MatterBlock mb = matter_block(model, basis, params);
    const FockSpace field{params.cutoff};
    const FockOperators f = fock_ops(field);
    const RMatrix x = position_quadrature(field);
    const OperatorMatrix id_m = OperatorMatrix::identity(mb.h0.dim());
    const OperatorMatrix id_f = OperatorMatrix::identity(field.dim());
    const double qa = model.charge * params.a0;
    return params.omega_c * kron(id_m, f.n) + kron(mb.h0, id_f) +
           (-qa / model.mass) * kron(mb.p, OperatorMatrix(x, true)) +
           (qa * qa / (2.0 * model.mass)) * kron(id_m, OperatorMatrix(RMatrix(x * x), true));
}

double trk_sum(const MatterBasis& basis, const ParticleModel& model, std::optional<int> levels) {
    const int l = levels.value_or(basis.levels());
    require(l >= 2 && l <= basis.levels(), "trk_sum levels must lie in [2, M]");
    double s = 0.0;
    for (int n = 1; n < l; ++n) {
        const double x = basis.x_elems(n, 0);
        s += 2.0 * model.mass * basis.omega(n, 0) * x * x;
    }
    return s;
}

std::vector<FullModelScanRow> full_model_scan(const ParticleModel& model, const MatterBasis& basis,
                                              const FullModelParams& base,
                                              const std::vector<int>& m_values, int levels) {
    require(!m_values.empty(), "full_model_scan needs at least one M_used value");
    require(levels >= 1, "full_model_scan levels must be >= 1");
    std::vector<FullModelScanRow> rows;
    rows.reserve(m_values.size());
    for (int m : m_values) {
        FullModelParams fp = base;
        fp.m_used = m;
        FullModelScanRow row;
        row.m_used = m;
        const auto count = static_cast<std::size_t>(levels);
        row.dipole = hermitian_eig(build_full_H_D(model, basis, fp), {false}).transitions(count);
        row.coulomb = hermitian_eig(build_full_H_C(model, basis, fp), {false}).transitions(count);
        row.gap = spectral_distance(row.dipole, row.coulomb) / fp.omega_c;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gaugeqed
