#pragma once

// The two-level (quantum Rabi) gauge family.
//
// All builders act on qubit ⊗ Fock space of dimension 2 (cutoff + 1) and use
// ℏ = 1. Constant energy shifts are dropped; spectra are compared through
// transitions E_n - E_0.

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/qops.hpp"

#include <optional>
#include <string>

namespace gaugeqed {

struct RabiParams {
    double omega_c = 1.0;   // cavity frequency
    double omega_10 = 1.0;  // qubit transition frequency
    double eta = 0.0;       // g_D / omega_c
    int cutoff = 40;        // Fock N_max

    double g_dipole() const noexcept { return eta * omega_c; }
    double g_coulomb() const noexcept { return g_dipole() * omega_10 / omega_c; }
    double detuning() const noexcept { return omega_10 - omega_c; }
    FockSpace field() const noexcept { return FockSpace{cutoff}; }

    /// Throws ErrorKind::validation on out-of-range fields.
    void validate() const;

    static RabiParams from_detuning(double eta, double detuning, int cutoff, double omega_c = 1.0);
};

struct GaugeParam {
    double alpha = 0.0;  // 0: dipole gauge, 1: Coulomb gauge
};

enum class CoulombMethod { conjugation, closed_form };

/// ω_c a†a + (ω_10/2) σ_z + i g_D (a† - a) σ_x.
OperatorMatrix build_H_D(const RabiParams& p);

/// Constant g_D²/ω_c dropped from the dipole-gauge Hamiltonian.
double dipole_constant(const RabiParams& p);

/// Standard Coulomb-gauge truncation:
/// ω_c a†a + (ω_10/2) σ_z + g_C σ_y (a + a†) + D (a + a†)².
/// D defaults to the TRK-saturated value g_C²/ω_10.
OperatorMatrix build_H_C_standard(const RabiParams& p,
                                  std::optional<double> diamagnetic_coeff = std::nullopt);

double default_diamagnetic_coeff(const RabiParams& p);

/// Coulomb gauge with the truncation-consistent minimal coupling:
/// ω_c a†a + 𝒰 (ω_10 σ_z / 2) 𝒰†, 𝒰 = exp[iη σ_x (a + a†)].
OperatorMatrix build_H_C_correct(const RabiParams& p,
                                 CoulombMethod method = CoulombMethod::closed_form);

/// build_H_C_correct with cos/sin replaced by their order-n Maclaurin
/// polynomials in 2η(a + a†), evaluated by Horner recurrence.
OperatorMatrix build_H_C_taylor(const RabiParams& p, int order);

/// 𝒰 = exp[iη σ_x (a + a†)].
OperatorMatrix coulomb_rotation(const RabiParams& p);

/// α-gauge Hamiltonian; α = 0 is build_H_D and α = 1 is build_H_C_correct(closed_form),
/// entry for entry.
OperatorMatrix build_H_alpha(const RabiParams& p, GaugeParam g);

struct GaugeTheoremReport {
    double full_deviation = 0.0;      // max |𝒰 (H_D + C) 𝒰† - H_C| over the whole matrix
    double interior_deviation = 0.0;  // same, restricted to Fock levels < interior_levels
    double boundary_deviation = 0.0;  // entries touching the top Fock levels
    double constant_offset = 0.0;     // C = g_D²/ω_c restored before comparing
    int interior_levels = 0;
    int cutoff = 0;

    bool passes(double tolerance = 1e-8) const { return interior_deviation <= tolerance; }
};

/// Checks 𝒰 H_D 𝒰† = H_C as a matrix identity (up to the dropped constant).
/// interior_levels defaults to 80% of the Fock dimension.
GaugeTheoremReport check_gauge_theorem(const RabiParams& p,
                                       std::optional<int> interior_levels = std::nullopt);

std::string to_string(CoulombMethod method);

}  // namespace gaugeqed
