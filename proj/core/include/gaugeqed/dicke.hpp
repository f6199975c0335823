#pragma once

// N-dipole (Dicke) Hamiltonians in the symmetric spin-j sector, j = N/2.
// Matter space is ordered by ascending m; composite ordering is spin ⊗ Fock.

#include "gaugeqed/linalg.hpp"
#include "gaugeqed/rabi.hpp"

#include <optional>

namespace gaugeqed {

struct DickeParams {
    int n_dipoles = 1;
    RabiParams rabi;

    SpinSpace spin() const noexcept { return SpinSpace{n_dipoles}; }
    double j() const noexcept { return 0.5 * n_dipoles; }
    void validate() const;
};

enum class DickeMethod { conjugation, closed_form };

/// ω_c a†a + ω_10 J_z + 2 g_C (a + a†) J_y + D_N (a + a†)²,
/// D_N defaulting to j · 2 g_C² / ω_10.
OperatorMatrix build_dicke_standard(const DickeParams& p,
                                    std::optional<double> diamagnetic_coeff = std::nullopt);

/// ω_c a†a + ω_10 J_z + 2i g_D (a† - a) J_x + (4 g_D²/ω_c)(J_x² - j/2).
/// The dropped constant N g_D²/ω_c makes N = 1 coincide with build_H_D.
OperatorMatrix build_dicke_dipole(const DickeParams& p);

/// 𝒰_N = exp[i 2η (a + a†) J_x].
OperatorMatrix dicke_rotation(const DickeParams& p);

/// Conjugation: ω_c a†a + 𝒰_N (ω_10 J_z) 𝒰_N†.
/// Closed form: ω_c a†a + ω_10 {J_z cos[c η (a + a†)] + J_y sin[c η (a + a†)]}.
/// The rotation identity fixes c = 2; `angle_factor` lets callers test others.
OperatorMatrix build_dicke_correct(const DickeParams& p, DickeMethod method,
                                   double angle_factor = 2.0);

struct DickeFactorReport {
    double deviation_factor_2 = 0.0;  // max |closed_form(c=2) - conjugation|
    double deviation_factor_4 = 0.0;  // max |closed_form(c=4) - conjugation|
    double matching_factor = 0.0;     // whichever agrees to 1e-9, else 0
};

/// Compares the closed form at c = 2 and c = 4 against the conjugation ground truth.
DickeFactorReport dicke_factor_report(const DickeParams& p);

}  // namespace gaugeqed
