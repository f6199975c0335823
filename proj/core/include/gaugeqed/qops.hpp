#pragma once

// Truncated Fock-space, Pauli and spin-j operators, plus the matter ⊗ field
// embedding used by every composite Hamiltonian in the library.
//
// Conventions:
//   - composite ordering is matter ⊗ field (matter index varies slowest);
//   - the qubit basis is (|0> ground, |1> excited) with σ_z = diag(-1, +1);
//   - spin-j bases are ordered by ascending m, so j = 1/2 matches the qubit.

#include "gaugeqed/linalg.hpp"

namespace gaugeqed {

struct FockSpace {
    int cutoff = 1;  // N_max; states |0>..|N_max>
    Index dim() const noexcept { return cutoff + 1; }
};

struct FockOperators {
    OperatorMatrix a;
    OperatorMatrix a_dag;
    OperatorMatrix n;
};

/// a[n-1][n] = sqrt(n); a_dag = a†; n = diag(0..N_max).
FockOperators fock_ops(const FockSpace& space);

/// Field quadrature a + a† (real symmetric tridiagonal).
RMatrix position_quadrature(const FockSpace& space);

/// i(a - a†), the conjugate quadrature (purely imaginary Hermitian).
OperatorMatrix momentum_quadrature(const FockSpace& space);

struct SpinSpace {
    int two_j = 1;  // dimension two_j + 1
    Index dim() const noexcept { return two_j + 1; }
    double j() const noexcept { return 0.5 * two_j; }
};

struct SpinOperators {
    OperatorMatrix jx;
    OperatorMatrix jy;
    OperatorMatrix jz;
};

SpinOperators spin_ops(const SpinSpace& space);

struct PauliOperators {
    OperatorMatrix sx;
    OperatorMatrix sy;
    OperatorMatrix sz;
};

/// σ_k = 2 J_k at j = 1/2.
PauliOperators pauli_ops();

enum class Slot { matter, field };

/// op ⊗ I_field for Slot::matter, I_matter ⊗ op for Slot::field.
/// ErrorKind::dimension_mismatch when op does not fit the slot.
OperatorMatrix embed(const OperatorMatrix& op, Slot slot, Index matter_dim, Index field_dim);

}  // namespace gaugeqed
