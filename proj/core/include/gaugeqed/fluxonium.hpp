#pragma once

// Fluxonium qubit capacitively coupled to an LC oscillator (charge gauge).
//
// The fluxonium 4 E_C N² + (E_L/2) φ² - E_J cos φ, [φ, N] = i, is diagonalized
// in the oscillator basis of its quadratic part. Energies are in units of the
// LC frequency unless omega_c says otherwise. The oscillator charge quadrature
// is written Y = i(a - a†), so the reduced charge is χ0·Y.

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/rabi.hpp"

#include <vector>

namespace gaugeqed {

struct FluxoniumParams {
    double e_c = 0.2;      // Ẽ_C
    double e_l = 0.15;     // Ẽ_L
    double e_j = 1.0;      // E_J
    int basis_size = 60;   // oscillator states used for the fluxonium itself
    int levels = 6;        // eigenstates kept in FluxoniumBasis
    double omega_c = 1.0;  // LC frequency
    double chi0 = 0.0;     // reduced-charge zero-point amplitude
    int cutoff = 40;       // LC Fock N_max

    void validate() const;
};

struct FluxoniumBasis {
    std::vector<double> energies;  // ascending
    RMatrix phi_elems;             // <i|φ|j>, real symmetric
    CMatrix n_elems;               // <i|N|j>, purely imaginary antisymmetric
    double plasma_frequency = 0.0; // sqrt(8 E_C E_L)
    double phi_zpf = 0.0;          // (2 E_C / E_L)^(1/4)
    int basis_size = 0;

    double omega_10() const { return energies.at(1) - energies.at(0); }
    /// Phase convention: each excited state is signed so that <n|φ|0> >= 0.
    double phi_10() const { return phi_elems(1, 0); }
};

/// Throws ErrorKind::basis_too_small when doubling basis_size moves any kept
/// level by more than 1e-8.
FluxoniumBasis solve_fluxonium(const FluxoniumParams& p);

/// g_C = ω_10 φ_10 χ0.
double flux_coupling(const FluxoniumParams& p, const FluxoniumBasis& basis);

/// 4 Ẽ_C χ0², the coefficient of -(a - a†)² in the standard two-level model.
double flux_diamagnetic_coeff(const FluxoniumParams& p);

/// Two-level standard model:
/// ω_c a†a + (ω_10/2) σ_z + i g_C σ_y (a - a†) - 4 Ẽ_C χ0² (a - a†)².
OperatorMatrix build_flux_charge_standard(const FluxoniumParams& p, const FluxoniumBasis& basis);

enum class RotationConvention {
    substitution,  // ℛ = exp[-β σ_x (a - a†)]: N → N + χ, matches the standard model to first order
    as_printed,    // ℛ = exp[+β σ_x (a - a†)]: σ_z-conjugate of the above
};

/// ℛ with β = g_C / ω_10.
OperatorMatrix flux_rotation(const FluxoniumParams& p, const FluxoniumBasis& basis,
                             RotationConvention convention = RotationConvention::substitution);

/// Conjugation: ω_c a†a + ℛ (ω_10 σ_z / 2) ℛ†.
/// Closed form (substitution convention):
/// ω_c a†a + (ω_10/2) {cosh[2β(a - a†)] σ_z + i sinh[2β(a - a†)] σ_y}.
OperatorMatrix build_flux_charge_correct(
    const FluxoniumParams& p, const FluxoniumBasis& basis,
    CoulombMethod method = CoulombMethod::closed_form,
    RotationConvention convention = RotationConvention::substitution);

/// Rabi parameters with the same spectrum after a → -i a:
/// ω_10 and ω_c carried over, η = φ_10 χ0.
RabiParams equivalent_rabi(const FluxoniumParams& p, const FluxoniumBasis& basis);

std::string to_string(RotationConvention convention);

}  // namespace gaugeqed
