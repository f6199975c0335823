#include "gaugeqed/rabi.hpp"

#include "composite.hpp"
#include "gaugeqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gaugeqed {

namespace {

constexpr Index qubit_dim = 2;

OperatorMatrix field_op(const RMatrix& m) { return OperatorMatrix(m, true); }

// Maclaurin coefficients of cos (even powers) or sin (odd powers) up to `order`,
// indexed by the power of X² they multiply.
std::vector<double> maclaurin_in_square(int order, bool odd) {
    std::vector<double> coeffs;
    double inv_factorial = 1.0;  // 1/k!
    for (int k = 0; k <= order; ++k) {
        if (k > 0) inv_factorial /= static_cast<double>(k);
        if ((k % 2 == 1) != odd) continue;
        const int j = odd ? (k - 1) / 2 : k / 2;
        coeffs.push_back(j % 2 == 0 ? inv_factorial : -inv_factorial);
    }
    return coeffs;
}

RMatrix horner(const std::vector<double>& coeffs, const RMatrix& square) {
    const Index dim = square.rows();
    RMatrix result = RMatrix::Zero(dim, dim);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        result = result * square;
        result.diagonal().array() += *it;
    }
    return result;
}

OperatorMatrix dipole_coupling(const RabiParams& p, double scale) {
    const FockOperators f = fock_ops(p.field());
    const PauliOperators s = pauli_ops();
    return Complex(0.0, scale * p.g_dipole()) * kron(s.sx, f.a_dag - f.a);
}

}  // namespace

void RabiParams::validate() const {
    require(omega_c > 0.0, "omega_c must be > 0");
    require(omega_10 > 0.0, "omega_10 must be > 0");
    require(eta >= 0.0, "eta must be >= 0");
    require(cutoff >= 1, "cutoff must be >= 1");
}

RabiParams RabiParams::from_detuning(double eta, double detuning, int cutoff, double omega_c) {
    RabiParams p;
    p.omega_c = omega_c;
    p.omega_10 = omega_c + detuning;
    p.eta = eta;
    p.cutoff = cutoff;
    return p;
}

std::string to_string(CoulombMethod method) {
    return method == CoulombMethod::conjugation ? "conjugation" : "closed_form";
}

double dipole_constant(const RabiParams& p) {
    const double g = p.g_dipole();
    return g * g / p.omega_c;
}

double default_diamagnetic_coeff(const RabiParams& p) {
    const double g = p.g_coulomb();
    return g * g / p.omega_10;
}

OperatorMatrix build_H_D(const RabiParams& p) {
    p.validate();
    const PauliOperators s = pauli_ops();
    const FockSpace field = p.field();
    return detail::photon_energy(p.omega_c, qubit_dim, field) +
           (0.5 * p.omega_10) * kron(s.sz, OperatorMatrix::identity(field.dim())) +
           dipole_coupling(p, 1.0);
}

OperatorMatrix build_H_C_standard(const RabiParams& p, std::optional<double> diamagnetic_coeff) {
    p.validate();
    const double d = diamagnetic_coeff.value_or(default_diamagnetic_coeff(p));
    const PauliOperators s = pauli_ops();
    const FockSpace field = p.field();
    const RMatrix x = position_quadrature(field);
    return detail::photon_energy(p.omega_c, qubit_dim, field) +
           (0.5 * p.omega_10) * kron(s.sz, OperatorMatrix::identity(field.dim())) +
           p.g_coulomb() * kron(s.sy, field_op(x)) +
           d * kron(OperatorMatrix::identity(qubit_dim), field_op(x * x));
}

OperatorMatrix coulomb_rotation(const RabiParams& p) {
    p.validate();
    const PauliOperators s = pauli_ops();
    return unitary_exp(kron(s.sx, field_op(position_quadrature(p.field()))), p.eta);
}

OperatorMatrix build_H_C_correct(const RabiParams& p, CoulombMethod method) {
    p.validate();
    const PauliOperators s = pauli_ops();
    const FockSpace field = p.field();
    const OperatorMatrix photon = detail::photon_energy(p.omega_c, qubit_dim, field);
    if (method == CoulombMethod::conjugation) {
        const OperatorMatrix bare =
            (0.5 * p.omega_10) * kron(s.sz, OperatorMatrix::identity(field.dim()));
        return photon + conjugate(coulomb_rotation(p), bare);
    }
    return photon + (0.5 * p.omega_10) * detail::rotated_term(s.sz, s.sy,
                                                              position_quadrature(field),
                                                              2.0 * p.eta);
}

OperatorMatrix build_H_C_taylor(const RabiParams& p, int order) {
    p.validate();
    require(order >= 1, "Taylor order must be >= 1");
    const PauliOperators s = pauli_ops();
    const FockSpace field = p.field();
    const RMatrix x = (2.0 * p.eta) * position_quadrature(field);
    const RMatrix x2 = x * x;
    RMatrix cos_poly = horner(maclaurin_in_square(order, false), x2);
    RMatrix sin_poly = x * horner(maclaurin_in_square(order, true), x2);
    // Polynomials of a symmetric matrix are symmetric; clear the rounding asymmetry.
    cos_poly = 0.5 * (cos_poly + cos_poly.transpose()).eval();
    sin_poly = 0.5 * (sin_poly + sin_poly.transpose()).eval();
    return detail::photon_energy(p.omega_c, qubit_dim, field) +
           (0.5 * p.omega_10) * (kron(s.sz, field_op(cos_poly)) + kron(s.sy, field_op(sin_poly)));
}

OperatorMatrix build_H_alpha(const RabiParams& p, GaugeParam g) {
    p.validate();
    require(g.alpha >= 0.0 && g.alpha <= 1.0, "alpha must lie in [0, 1]");
    const PauliOperators s = pauli_ops();
    const FockSpace field = p.field();
    const OperatorMatrix photon = detail::photon_energy(p.omega_c, qubit_dim, field);
    const OperatorMatrix qubit =
        (0.5 * p.omega_10) *
        detail::rotated_term(s.sz, s.sy, position_quadrature(field), 2.0 * g.alpha * p.eta);
    if (g.alpha == 1.0) return photon + qubit;
    return photon + qubit + dipole_coupling(p, 1.0 - g.alpha);
}

GaugeTheoremReport check_gauge_theorem(const RabiParams& p, std::optional<int> interior_levels) {
    p.validate();
    const Index fock_dim = p.field().dim();
    const int interior = interior_levels.value_or(static_cast<int>(std::floor(0.8 * fock_dim)));
    require(interior >= 1 && interior <= fock_dim, "interior_levels must lie in [1, cutoff + 1]");

    GaugeTheoremReport report;
    report.constant_offset = dipole_constant(p);
    report.interior_levels = interior;
    report.cutoff = p.cutoff;

    const OperatorMatrix dipole =
        build_H_D(p) + report.constant_offset * OperatorMatrix::identity(qubit_dim * fock_dim);
    const OperatorMatrix lhs = conjugate(coulomb_rotation(p), dipole);
    const OperatorMatrix rhs = build_H_C_correct(p, CoulombMethod::closed_form);
    const CMatrix diff = lhs.matrix() - rhs.matrix();

    const Index dim = diff.rows();
    for (Index r = 0; r < dim; ++r) {
        const bool r_inside = (r % fock_dim) < interior;
        for (Index c = 0; c < dim; ++c) {
            const double v = std::abs(diff(r, c));
            report.full_deviation = std::max(report.full_deviation, v);
            if (r_inside && (c % fock_dim) < interior) {
                report.interior_deviation = std::max(report.interior_deviation, v);
            } else {
                report.boundary_deviation = std::max(report.boundary_deviation, v);
            }
        }
    }
    return report;
}

}  // namespace gaugeqed
