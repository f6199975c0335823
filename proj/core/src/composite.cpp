#include "composite.hpp"

#include <cmath>

namespace gaugeqed::detail {

OperatorMatrix photon_energy(double omega_c, Index matter_dim, const FockSpace& field) {
    return omega_c * kron(OperatorMatrix::identity(matter_dim), fock_ops(field).n);
}

OperatorMatrix rotated_term(const OperatorMatrix& z, const OperatorMatrix& y, const RMatrix& q,
                            double s) {
    const Index dim = q.rows();
    if (s == 0.0) return kron(z, OperatorMatrix::identity(dim));
    const RMatrix arg = s * q;
    const OperatorMatrix c(matrix_function(arg, [](double x) { return std::cos(x); }), true);
    const OperatorMatrix si(matrix_function(arg, [](double x) { return std::sin(x); }), true);
    return kron(z, c) + kron(y, si);
}

OperatorMatrix rotated_term(const OperatorMatrix& z, const OperatorMatrix& y,
                            const OperatorMatrix& q, double s) {
    if (s == 0.0) return kron(z, OperatorMatrix::identity(q.dim()));
    const OperatorMatrix arg = s * q;
    const OperatorMatrix c = matrix_function(arg, [](double x) { return std::cos(x); });
    const OperatorMatrix si = matrix_function(arg, [](double x) { return std::sin(x); });
    return kron(z, c) + kron(y, si);
}

}  // namespace gaugeqed::detail
