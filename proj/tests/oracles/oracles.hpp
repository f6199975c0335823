#pragma once

// Reference implementations that share no numerical code with the library.
// They are slow and only meant for small dimensions.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace oracle {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

struct JacobiResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
JacobiResult jacobi_eig(const CMatrix& h, double tolerance = 1e-14, int max_sweeps = 60);

/// exp(iθA) by scaling and squaring with an order-20 Taylor polynomial.
CMatrix taylor_expi(const CMatrix& a, double theta);

/// Plain truncated-ladder builders (matter ⊗ field, loops only).
CMatrix ladder(int cutoff);
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct ParticleLevels {
    std::vector<double> energies;
    RMatrix x_elems;
};

/// -μx² + λx⁴ in a harmonic-oscillator basis of length scale `scale`.
ParticleLevels double_well_ho_basis(double mu, double lambda, double mass, int basis = 300,
                                    double scale = 0.6, int levels = 60);

struct FluxoniumLevels {
    std::vector<double> energies;
    double phi_10 = 0.0;
};

/// Fluxonium on a phase grid: 2nd-order differences, Sturm bisection, inverse
/// iteration, Richardson extrapolation over two spacings.
FluxoniumLevels fluxonium_phase_grid(double e_c, double e_l, double e_j, int points = 4001,
                                     double width = 40.0);

}  // namespace oracle
