#include "gaugeqed/qops.hpp"

#include "gaugeqed/errors.hpp"

#include <cmath>
#include <string>

namespace gaugeqed {

FockOperators fock_ops(const FockSpace& space) {
    require(space.cutoff >= 1, "Fock cutoff must be >= 1");
    const Index dim = space.dim();
    RMatrix a = RMatrix::Zero(dim, dim);
    RMatrix n = RMatrix::Zero(dim, dim);
    for (Index k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    for (Index k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return {OperatorMatrix(a), OperatorMatrix(RMatrix(a.transpose())), OperatorMatrix(n, true)};
}

RMatrix position_quadrature(const FockSpace& space) {
    require(space.cutoff >= 1, "Fock cutoff must be >= 1");
    const Index dim = space.dim();
    RMatrix x = RMatrix::Zero(dim, dim);
    for (Index k = 1; k < dim; ++k) {
        const double s = std::sqrt(static_cast<double>(k));
        x(k - 1, k) = s;
        x(k, k - 1) = s;
    }
    return x;
}

OperatorMatrix momentum_quadrature(const FockSpace& space) {
    require(space.cutoff >= 1, "Fock cutoff must be >= 1");
    const Index dim = space.dim();
    CMatrix y = CMatrix::Zero(dim, dim);
    for (Index k = 1; k < dim; ++k) {
        const double s = std::sqrt(static_cast<double>(k));
        y(k - 1, k) = Complex(0.0, s);
        y(k, k - 1) = Complex(0.0, -s);
    }
    return OperatorMatrix(std::move(y), true);
}

SpinOperators spin_ops(const SpinSpace& space) {
    require(space.two_j >= 1, "two_j must be >= 1");
    const Index dim = space.dim();
    const double j = space.j();
    CMatrix jp = CMatrix::Zero(dim, dim);
    CMatrix jz = CMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        const double m = -j + static_cast<double>(k);
        jz(k, k) = m;
        if (k + 1 < dim) jp(k + 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const CMatrix jm = jp.adjoint();
    CMatrix jx = 0.5 * (jp + jm);
    CMatrix jy = (jp - jm) / Complex(0.0, 2.0);
    return {OperatorMatrix(std::move(jx), true), OperatorMatrix(std::move(jy), true),
            OperatorMatrix(std::move(jz), true)};
}

PauliOperators pauli_ops() {
    const SpinOperators s = spin_ops(SpinSpace{1});
    return {2.0 * s.jx, 2.0 * s.jy, 2.0 * s.jz};
}

OperatorMatrix embed(const OperatorMatrix& op, Slot slot, Index matter_dim, Index field_dim) {
    const Index expected = slot == Slot::matter ? matter_dim : field_dim;
    if (op.dim() != expected) {
        fail(ErrorKind::dimension_mismatch, "embed: operator dim " + std::to_string(op.dim()) +
                                                " does not match slot dim " +
                                                std::to_string(expected));
    }
    if (slot == Slot::matter) return kron(op, OperatorMatrix::identity(field_dim));
    return kron(OperatorMatrix::identity(matter_dim), op);
}

}  // namespace gaugeqed
