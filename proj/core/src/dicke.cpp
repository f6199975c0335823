#include "gaugeqed/dicke.hpp"

#include "composite.hpp"
#include "gaugeqed/errors.hpp"

namespace gaugeqed {

void DickeParams::validate() const {
    require(n_dipoles >= 1, "n_dipoles must be >= 1");
    rabi.validate();
}

OperatorMatrix build_dicke_standard(const DickeParams& p, std::optional<double> diamagnetic_coeff) {
    p.validate();
    const RabiParams& r = p.rabi;
    const SpinOperators s = spin_ops(p.spin());
    const FockSpace field = r.field();
    const RMatrix x = position_quadrature(field);
    const double g = r.g_coulomb();
    const double d = diamagnetic_coeff.value_or(p.j() * 2.0 * g * g / r.omega_10);
    const Index spin_dim = p.spin().dim();
    return detail::photon_energy(r.omega_c, spin_dim, field) +
           r.omega_10 * kron(s.jz, OperatorMatrix::identity(field.dim())) +
           (2.0 * g) * kron(s.jy, OperatorMatrix(x, true)) +
           d * kron(OperatorMatrix::identity(spin_dim), OperatorMatrix(RMatrix(x * x), true));
}

OperatorMatrix build_dicke_dipole(const DickeParams& p) {
    p.validate();
    const RabiParams& r = p.rabi;
    const SpinOperators s = spin_ops(p.spin());
    const FockSpace field = r.field();
    const FockOperators f = fock_ops(field);
    // Collective self-energy; the single-dipole part j/2 is the dropped constant.
    const CMatrix jx2 = s.jx.matrix() * s.jx.matrix() -
                        0.5 * p.j() * CMatrix::Identity(p.spin().dim(), p.spin().dim());
    const double g = r.g_dipole();
    return detail::photon_energy(r.omega_c, p.spin().dim(), field) +
           r.omega_10 * kron(s.jz, OperatorMatrix::identity(field.dim())) +
           Complex(0.0, 2.0 * g) * kron(s.jx, f.a_dag - f.a) +
           (4.0 * g * g / r.omega_c) *
               kron(OperatorMatrix(CMatrix(0.5 * (jx2 + jx2.adjoint())), true),
                    OperatorMatrix::identity(field.dim()));
}

OperatorMatrix dicke_rotation(const DickeParams& p) {
    p.validate();
    const SpinOperators s = spin_ops(p.spin());
    const OperatorMatrix generator =
        kron(s.jx, OperatorMatrix(position_quadrature(p.rabi.field()), true));
    return unitary_exp(generator, 2.0 * p.rabi.eta);
}

OperatorMatrix build_dicke_correct(const DickeParams& p, DickeMethod method, double angle_factor) {
    p.validate();
    const RabiParams& r = p.rabi;
    const SpinOperators s = spin_ops(p.spin());
    const FockSpace field = r.field();
    const OperatorMatrix photon = detail::photon_energy(r.omega_c, p.spin().dim(), field);
    if (method == DickeMethod::conjugation) {
        const OperatorMatrix bare = r.omega_10 * kron(s.jz, OperatorMatrix::identity(field.dim()));
        return photon + conjugate(dicke_rotation(p), bare);
    }
    return photon + r.omega_10 * detail::rotated_term(s.jz, s.jy, position_quadrature(field),
                                                      angle_factor * r.eta);
}

DickeFactorReport dicke_factor_report(const DickeParams& p) {
    const OperatorMatrix truth = build_dicke_correct(p, DickeMethod::conjugation);
    DickeFactorReport report;
    report.deviation_factor_2 =
        max_abs_difference(build_dicke_correct(p, DickeMethod::closed_form, 2.0), truth);
    report.deviation_factor_4 =
        max_abs_difference(build_dicke_correct(p, DickeMethod::closed_form, 4.0), truth);
    if (report.deviation_factor_2 <= 1e-9) {
        report.matching_factor = 2.0;
    } else if (report.deviation_factor_4 <= 1e-9) {
        report.matching_factor = 4.0;
    }
    return report;
}

}  // namespace gaugeqed
