#pragma once

// Shared pieces of the matter ⊗ field Hamiltonian builders.

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/qops.hpp"

namespace gaugeqed::detail {

/// ω_c · I_matter ⊗ a†a.
OperatorMatrix photon_energy(double omega_c, Index matter_dim, const FockSpace& field);

/// z ⊗ cos(s·Q) + y ⊗ sin(s·Q) for a real symmetric field operator Q.
/// At s == 0 this is exactly z ⊗ I.
OperatorMatrix rotated_term(const OperatorMatrix& z, const OperatorMatrix& y, const RMatrix& q,
                            double s);

/// Same, for a complex Hermitian field operator.
OperatorMatrix rotated_term(const OperatorMatrix& z, const OperatorMatrix& y,
                            const OperatorMatrix& q, double s);

}  // namespace gaugeqed::detail
