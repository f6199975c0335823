#pragma once

// One-dimensional effective particle on a uniform grid (ℏ = 1).
//
// The kinetic term uses the 4th-order central stencil for d²/dx² and the
// momentum operator the antisymmetric 4th-order first-derivative stencil, both
// with Dirichlet walls just outside the grid. Matrix elements in the particle
// eigenbasis feed the full (untruncated-matter) dipole- and Coulomb-gauge models.

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/qops.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gaugeqed {

struct Grid {
    double x_min = -6.0;
    double x_max = 6.0;
    int n_points = 801;

    double spacing() const noexcept { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const noexcept { return x_min + i * spacing(); }
    std::vector<double> points() const;
};

struct ParticleModel {
    Grid grid;
    std::vector<double> potential;  // W(x) sampled on the grid
    double mass = 1.0;
    double charge = 1.0;
    int eigen_count = 10;
    std::string name = "custom";

    void validate() const;

    /// V = m ω0² x² / 2.
    static ParticleModel harmonic(double omega0, double mass, Grid grid, int eigen_count);
    /// V = -μ x² + λ x⁴ (symmetric double well).
    static ParticleModel double_well(double mu, double lambda, double mass, Grid grid,
                                     int eigen_count);
    /// Two-column "x V" text; '#' starts a comment. Non-uniform samples are
    /// linearly interpolated onto a uniform grid with the same number of points.
    static ParticleModel from_table(std::istream& in, double mass, int eigen_count);
};

struct MatterBasis {
    std::vector<double> energies;  // ascending, M entries
    RMatrix x_elems;               // <i|x|j>
    RMatrix x2_elems;              // <i|x²|j>
    CMatrix p_elems;               // <i|p|j>, purely imaginary antisymmetric
    RMatrix wavefunctions;         // n_points × M, normalized on the grid

    int levels() const noexcept { return static_cast<int>(energies.size()); }
    double omega(int i, int j) const { return energies[i] - energies[j]; }
};

struct SolveOptions {
    bool refinement_check = true;
    int checked_levels = 6;
    /// Bound on the Richardson-estimated eigenvalue error, |E_h - E_2h| / 15,
    /// relative to max(1, |E|).
    double refinement_tolerance = 1e-6;
    /// Bound on |ψ| at the outermost grid points relative to max |ψ|.
    double boundary_tolerance = 1e-8;
};

/// Lowest `eigen_count` eigenpairs of p²/2m + W(x).
/// Throws ErrorKind::grid_too_coarse or ErrorKind::boundary_leak.
MatterBasis solve_particle(const ParticleModel& model, const SolveOptions& options = {});

/// p²/2m on the grid (4th-order stencil).
RMatrix kinetic_matrix(const Grid& grid, double mass);
/// -i d/dx on the grid (4th-order antisymmetric stencil).
CMatrix momentum_matrix(const Grid& grid);

struct NonlocalKernel {
    RMatrix values;  // V(x_i, x_j)
    int levels = 0;
    double width = 0.0;
    /// ∫∫ |V|² over |x - x'| > width, divided by ∫∫ |V|².
    double off_diagonality = 0.0;
};

/// Projection of the local potential W(x) δ(x - x') onto the lowest `levels` states.
NonlocalKernel nonlocal_kernel(const MatterBasis& basis, const ParticleModel& model, int levels,
                               double width = 1.0);

struct MinimalCouplingReport {
    double raw_residual = 0.0;       // max entrywise |e^{iχ} O e^{-iχ} - O(x, p - qA0)|
    double subspace_residual = 0.0;  // same, projected on the lowest `subspace_levels` states
    double relative_residual = 0.0;  // subspace_residual / max |E| in that block
    double spectral_residual = 0.0;  // max eigenvalue shift under the phase conjugation
    int subspace_levels = 0;
};

/// Compares the gauge-phase conjugation e^{i q A0 x} O e^{-i q A0 x} of the grid
/// Hamiltonian O = p²/2m + W with the directly substituted O(x, p - q A0).
MinimalCouplingReport check_minimal_coupling_identity(const ParticleModel& model, double a0,
                                                      int subspace_levels = 10,
                                                      bool spectral_check = true);

enum class X2Treatment {
    full,       // <i|x²|j> from the grid
    projected,  // (P x P)², i.e. the x² of the truncated dipole operator
};

struct FullModelParams {
    double omega_c = 1.0;
    double a0 = 0.0;  // vector-potential zero-point amplitude
    int m_used = 2;   // particle levels kept
    int cutoff = 30;  // Fock N_max
    X2Treatment x2 = X2Treatment::full;
};

/// ω_c a†a + H0 + q² A0² ω_c x² + i q ω_c A0 x (a† - a), particle ⊗ field.
OperatorMatrix build_full_H_D(const ParticleModel& model, const MatterBasis& basis,
                              const FullModelParams& params);

/// ω_c a†a + H0 - (q/m) A0 p (a + a†) + (q² A0² / 2m) (a + a†)², particle ⊗ field.
OperatorMatrix build_full_H_C(const ParticleModel& model, const MatterBasis& basis,
                              const FullModelParams& params);

struct FullModelScanRow {
    int m_used = 0;
    double gap = 0.0;              // max_n |t_n^D - t_n^C| / ω_c
    std::vector<double> dipole;    // t_n = E_n - E_0 of build_full_H_D
    std::vector<double> coulomb;   // same for build_full_H_C
};

/// Both full models at each M_used in `m_values`, lowest `levels` transitions.
std::vector<FullModelScanRow> full_model_scan(const ParticleModel& model, const MatterBasis& basis,
                                              const FullModelParams& base,
                                              const std::vector<int>& m_values, int levels = 6);

/// Σ_{n>=1} 2m ω_n0 |x_n0|² over the first `levels` states (all retained by default).
double trk_sum(const MatterBasis& basis, const ParticleModel& model,
               std::optional<int> levels = std::nullopt);

}  // namespace gaugeqed
