#include "gaugeqed/fluxonium.hpp"

#include "composite.hpp"
#include "gaugeqed/errors.hpp"
#include "gaugeqed/qops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaugeqed {

namespace {

constexpr Index qubit_dim = 2;
constexpr double basis_tolerance = 1e-8;

struct RawSolution {
    Eigen::VectorXd values;
    RMatrix vectors;
    RMatrix phi;  // φ in the oscillator basis
};

RawSolution diagonalize(const FluxoniumParams& p, int basis_size, bool vectors) {
    const FockSpace space{basis_size - 1};
    const double phi_zpf = std::pow(2.0 * p.e_c / p.e_l, 0.25);
    const double omega_p = std::sqrt(8.0 * p.e_c * p.e_l);
    RMatrix phi = phi_zpf * position_quadrature(space);
    RMatrix h = RMatrix::Zero(basis_size, basis_size);
    for (int n = 0; n < basis_size; ++n) h(n, n) = omega_p * (n + 0.5);
    if (p.e_j != 0.0) h -= p.e_j * matrix_function(phi, [](double x) { return std::cos(x); });
    auto eig = symmetric_eig(h, vectors);
    return {std::move(eig.values), std::move(eig.vectors), std::move(phi)};
}

}  // namespace

void FluxoniumParams::validate() const {
    require(e_c > 0.0, "E_C must be > 0");
    require(e_l > 0.0, "E_L must be > 0");
    require(e_j >= 0.0, "E_J must be >= 0");
    require(basis_size >= 40, "fluxonium basis_size must be >= 40");
    require(levels >= 2 && levels <= basis_size, "fluxonium levels must lie in [2, basis_size]");
    require(omega_c > 0.0, "omega_c must be > 0");
    require(chi0 >= 0.0, "chi0 must be >= 0");
    require(cutoff >= 1, "cutoff must be >= 1");
}

FluxoniumBasis solve_fluxonium(const FluxoniumParams& p) {
    p.validate();
    RawSolution sol = diagonalize(p, p.basis_size, true);
    const Eigen::VectorXd doubled = diagonalize(p, 2 * p.basis_size, false).values;
    for (int k = 0; k < p.levels; ++k) {
        const double shift = std::abs(sol.values(k) - doubled(k));
        if (shift > basis_tolerance) {
            std::ostringstream msg;
            msg << "level " << k << " moves by " << shift << " when basis_size doubles from "
                << p.basis_size;
            fail(ErrorKind::basis_too_small, msg.str());
        }
    }

    RMatrix v = sol.vectors.leftCols(p.levels);
    const Eigen::VectorXd phi_0 = sol.phi * v.col(0);
    for (int k = 1; k < p.levels; ++k) {
        if (v.col(k).dot(phi_0) < 0.0) v.col(k) *= -1.0;
    }

    const FockSpace space{p.basis_size - 1};
    FluxoniumBasis basis;
    basis.energies.assign(sol.values.data(), sol.values.data() + p.levels);
    basis.phi_zpf = std::pow(2.0 * p.e_c / p.e_l, 0.25);
    basis.plasma_frequency = std::sqrt(8.0 * p.e_c * p.e_l);
    basis.basis_size = p.basis_size;
    RMatrix phi = v.transpose() * sol.phi * v;
    basis.phi_elems = 0.5 * (phi + phi.transpose());
    // N = -(1/(2 φ_zpf)) Y with Y = i(a - a†) in the fluxonium oscillator basis.
    const CMatrix y = momentum_quadrature(space).matrix();
    const CMatrix n_full = (-0.5 / basis.phi_zpf) * (v.cast<Complex>().transpose() * y * v);
    const RMatrix n_imag = n_full.imag();
    basis.n_elems = Complex(0.0, 1.0) * (0.5 * (n_imag - n_imag.transpose())).cast<Complex>();
    return basis;
}

double flux_coupling(const FluxoniumParams& p, const FluxoniumBasis& basis) {
    return basis.omega_10() * basis.phi_10() * p.chi0;
}

double flux_diamagnetic_coeff(const FluxoniumParams& p) { return 4.0 * p.e_c * p.chi0 * p.chi0; }

OperatorMatrix build_flux_charge_standard(const FluxoniumParams& p, const FluxoniumBasis& basis) {
    p.validate();
    const PauliOperators s = pauli_ops();
    const FockSpace field{p.cutoff};
    const OperatorMatrix y = momentum_quadrature(field);
    return detail::photon_energy(p.omega_c, qubit_dim, field) +
           (0.5 * basis.omega_10()) * kron(s.sz, OperatorMatrix::identity(field.dim())) +
           flux_coupling(p, basis) * kron(s.sy, y) +
           flux_diamagnetic_coeff(p) * kron(OperatorMatrix::identity(qubit_dim),
                                            OperatorMatrix(CMatrix(y.matrix() * y.matrix()), true));
}

OperatorMatrix flux_rotation(const FluxoniumParams& p, const FluxoniumBasis& basis,
                             RotationConvention convention) {
    p.validate();
    const double beta = flux_coupling(p, basis) / basis.omega_10();
    const PauliOperators s = pauli_ops();
    // exp[∓β σ_x (a - a†)] = exp[±iβ σ_x Y].
    const double sign = convention == RotationConvention::substitution ? 1.0 : -1.0;
    return unitary_exp(kron(s.sx, momentum_quadrature(FockSpace{p.cutoff})), sign * beta);
}

OperatorMatrix build_flux_charge_correct(const FluxoniumParams& p, const FluxoniumBasis& basis,
                                         CoulombMethod method, RotationConvention convention) {
    p.validate();
    const PauliOperators s = pauli_ops();
    const FockSpace field{p.cutoff};
    const OperatorMatrix photon = detail::photon_energy(p.omega_c, qubit_dim, field);
    const double half = 0.5 * basis.omega_10();
    if (method == CoulombMethod::conjugation) {
        const OperatorMatrix bare = half * kron(s.sz, OperatorMatrix::identity(field.dim()));
        return photon + conjugate(flux_rotation(p, basis, convention), bare);
    }
    // cosh[2β(a - a†)] = cos(2βY) and i sinh[2β(a - a†)] = sin(2βY).
    const double beta = flux_coupling(p, basis) / basis.omega_10();
    const double sign = convention == RotationConvention::substitution ? 1.0 : -1.0;
    return photon +
           half * detail::rotated_term(s.sz, s.sy, momentum_quadrature(field), 2.0 * sign * beta);
}

RabiParams equivalent_rabi(const FluxoniumParams& p, const FluxoniumBasis& basis) {
    RabiParams r;
    r.omega_c = p.omega_c;
    r.omega_10 = basis.omega_10();
    r.eta = basis.phi_10() * p.chi0;
    r.cutoff = p.cutoff;
    return r;
}

std::string to_string(RotationConvention convention) {
    return convention == RotationConvention::substitution ? "substitution" : "as_printed";
}

}  // namespace gaugeqed
