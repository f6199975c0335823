#include "golden.hpp"
#include "oracles/oracles.hpp"
#include "test_support.hpp"

#include <gaugeqed/errors.hpp>
#include <gaugeqed/fluxonium.hpp>
#include <gaugeqed/qops.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace gaugeqed;
using testing_support::max_diff;
using testing_support::transitions;

namespace {

FluxoniumParams anharmonic(double chi0 = 0.0, int cutoff = 30) {
    FluxoniumParams p;
    p.chi0 = chi0;
    p.cutoff = cutoff;
    return p;
}

const FluxoniumBasis& anharmonic_basis() {
    static const FluxoniumBasis b = solve_fluxonium(anharmonic());
    return b;
}

}  // namespace

TEST(Fluxonium, Validation) {
    FluxoniumParams p;
    p.basis_size = 39;
    EXPECT_THROW(p.validate(), Error);
    p = FluxoniumParams{};
    p.e_j = -1.0;
    EXPECT_THROW(p.validate(), Error);
}

TEST(Fluxonium, HarmonicLimit) {
    FluxoniumParams p;
    p.e_j = 0.0;
    const FluxoniumBasis b = solve_fluxonium(p);
    const double wp = std::sqrt(8.0 * p.e_c * p.e_l);
    for (std::size_t n = 0; n < b.energies.size(); ++n) {
        EXPECT_NEAR(b.energies[n], wp * (n + 0.5), 1e-8);
    }
    EXPECT_NEAR(b.phi_10(), std::pow(2.0 * p.e_c / p.e_l, 0.25), 1e-6);
    EXPECT_NEAR(b.n_elems(1, 0).imag(), 1.0 / (2.0 * b.phi_zpf), 1e-10);
}

TEST(Fluxonium, AnharmonicGoldenAndGridOracle) {
    const FluxoniumBasis& b = anharmonic_basis();
    EXPECT_NEAR(b.omega_10(), golden::fluxonium_omega10, 1e-9);
    EXPECT_NEAR(b.phi_10(), golden::fluxonium_phi10, 1e-9);
    const auto ref = oracle::fluxonium_phase_grid(0.2, 0.15, 1.0);
    EXPECT_NEAR(b.omega_10(), ref.energies[1] - ref.energies[0], 1e-7);
    EXPECT_NEAR(b.phi_10(), ref.phi_10, 1e-6);
    EXPECT_GT(b.phi_10(), 0.0);
}

TEST(Fluxonium, BasisTooSmall) {
    FluxoniumParams p;
    p.e_c = 2.0;
    p.e_l = 0.01;
    p.e_j = 6.0;
    p.basis_size = 40;
    try {
        (void)solve_fluxonium(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::basis_too_small);
    }
}

TEST(FluxCharge, DecoupledAtZeroChi) {
    const FluxoniumBasis& b = anharmonic_basis();
    const double w = b.omega_10();
    std::vector<double> expected{std::min(1.0, w), std::max(1.0, w)};
    EXPECT_LE(max_diff(transitions(build_flux_charge_standard(anharmonic(), b), 2), expected), 1e-12);
    EXPECT_LE(max_diff(transitions(build_flux_charge_correct(anharmonic(), b), 2), expected), 1e-12);
}

TEST(FluxCharge, DiamagneticTermIsPositive) {
    const FockSpace field{20};
    const OperatorMatrix y = momentum_quadrature(field);
    const auto ym = OperatorMatrix(CMatrix(y.matrix() * y.matrix()), true);
    // -(a - a†)² = Y²
    const auto f = fock_ops(field);
    const auto d = f.a - f.a_dag;
    EXPECT_LE(max_abs_difference(-1.0 * (d * d), ym), 1e-12);
    EXPECT_GE(hermitian_eig(ym, {false}).eigenvalues.front(), -1e-12);
    EXPECT_GT(flux_diamagnetic_coeff(anharmonic(0.3)), 0.0);
}

TEST(FluxCharge, ResonantSplittingAtWeakCoupling) {
    const FluxoniumBasis& b = anharmonic_basis();
    FluxoniumParams p = anharmonic(0.005 / b.phi_10(), 10);
    p.omega_c = b.omega_10();
    const double g = flux_coupling(p, b);
    const auto t = transitions(build_flux_charge_standard(p, b), 2);
    EXPECT_NEAR((t[1] - t[0]) / (2.0 * g), 1.0, 0.02);
}

TEST(FluxCharge, StandardFailsAtUnitCoupling) {
    const FluxoniumBasis& b = anharmonic_basis();
    const FluxoniumParams p = anharmonic(1.0 / b.phi_10(), 80);
    const double t_std = transitions(build_flux_charge_standard(p, b), 1)[0];
    const double t_cor = transitions(build_flux_charge_correct(p, b), 1)[0];
    EXPECT_GT(std::abs(t_std - t_cor) / t_cor, 0.10);
}

TEST(FluxCharge, ConjugationEqualsClosedForm) {
    const FluxoniumBasis& b = anharmonic_basis();
    for (auto conv : {RotationConvention::substitution, RotationConvention::as_printed}) {
        const FluxoniumParams p = anharmonic(0.6, 40);
        EXPECT_LE(max_abs_difference(build_flux_charge_correct(p, b, CoulombMethod::conjugation, conv),
                                     build_flux_charge_correct(p, b, CoulombMethod::closed_form, conv)),
                  1e-9);
        EXPECT_LE(unitarity_defect(flux_rotation(p, b, conv)), 1e-10);
    }
}

TEST(FluxCharge, RotatedQubitKeepsItsSpectrum) {
    const FluxoniumBasis& b = anharmonic_basis();
    FluxoniumParams p = anharmonic(0.8, 15);
    const auto s = pauli_ops();
    const auto bare = (0.5 * b.omega_10()) * kron(s.sz, OperatorMatrix::identity(16));
    const auto e = hermitian_eig(conjugate(flux_rotation(p, b), bare), {false}).eigenvalues;
    for (std::size_t k = 0; k < e.size(); ++k) {
        EXPECT_NEAR(e[k], (k < 16 ? -0.5 : 0.5) * b.omega_10(), 1e-12);
    }
}

TEST(FluxCharge, ConventionsAreSigmaZConjugates) {
    const FluxoniumBasis& b = anharmonic_basis();
    const FluxoniumParams p = anharmonic(0.5, 20);
    const auto sz = kron(pauli_ops().sz, OperatorMatrix::identity(21));
    const auto sub = build_flux_charge_correct(p, b);
    const auto printed =
        build_flux_charge_correct(p, b, CoulombMethod::closed_form, RotationConvention::as_printed);
    EXPECT_LE(max_abs_difference(sz * sub * sz, printed), 1e-12);
    EXPECT_LE(max_diff(transitions(sub, 6), transitions(printed, 6)), 1e-10);
}

TEST(FluxCharge, SubstitutionConventionMatchesStandardToFirstOrder) {
    const FluxoniumBasis& b = anharmonic_basis();
    const double small = 1e-4;
    const FluxoniumParams p = anharmonic(small / b.phi_10(), 10);
    const auto sub = build_flux_charge_correct(p, b);
    const auto printed =
        build_flux_charge_correct(p, b, CoulombMethod::closed_form, RotationConvention::as_printed);
    const auto standard = build_flux_charge_standard(p, b);
    // Differences are O(β²) for the substitution sign and O(β) for the printed one.
    EXPECT_LE(max_abs_difference(sub, standard), 50.0 * small * small);
    EXPECT_GT(max_abs_difference(printed, standard), 0.1 * small);
}

TEST(FluxCharge, MapsOntoRabiFamily) {
    const FluxoniumBasis& b = anharmonic_basis();
    const FluxoniumParams p = anharmonic(0.7, 60);
    const RabiParams r = equivalent_rabi(p, b);
    EXPECT_LE(max_diff(transitions(build_flux_charge_correct(p, b), 6),
                       transitions(build_H_C_correct(r), 6)),
              1e-10);
    EXPECT_LE(max_diff(transitions(build_flux_charge_standard(p, b), 6),
                       transitions(build_H_C_standard(r, flux_diamagnetic_coeff(p)), 6)),
              1e-10);
}

TEST(FluxCharge, HarmonicLimitDictionaryIsTrkConsistent) {
    FluxoniumParams p;
    p.e_j = 0.0;
    p.chi0 = 0.4;
    const FluxoniumBasis b = solve_fluxonium(p);
    // ω_10 φ_10² = 4 E_C makes both diamagnetic prescriptions coincide.
    EXPECT_NEAR(default_diamagnetic_coeff(equivalent_rabi(p, b)), flux_diamagnetic_coeff(p), 1e-8);
}
