#include "golden.hpp"
#include "test_support.hpp"

#include <gaugeqed/dicke.hpp>
#include <gaugeqed/errors.hpp>

#include <gtest/gtest.h>

using namespace gaugeqed;
using testing_support::max_diff;
using testing_support::transitions;

namespace {

DickeParams dicke(int n, double eta, int cutoff) {
    return DickeParams{n, RabiParams::from_detuning(eta, 0.0, cutoff)};
}

}  // namespace

TEST(Dicke, Validation) { EXPECT_THROW(build_dicke_dipole(dicke(0, 0.1, 10)), Error); }

TEST(Dicke, SingleDipoleEqualsRabi) {
    for (double eta : {0.0, 0.3, 1.0}) {
        const DickeParams d = dicke(1, eta, 40);
        EXPECT_LE(max_diff(transitions(build_dicke_dipole(d), 8), transitions(build_H_D(d.rabi), 8)),
                  1e-10);
        EXPECT_LE(max_diff(transitions(build_dicke_standard(d), 8),
                           transitions(build_H_C_standard(d.rabi), 8)),
                  1e-10);
        EXPECT_LE(max_diff(transitions(build_dicke_correct(d, DickeMethod::closed_form), 8),
                           transitions(build_H_C_correct(d.rabi), 8)),
                  1e-10);
    }
}

TEST(Dicke, SingleDipoleEntryForEntry) {
    const DickeParams d = dicke(1, 0.6, 20);
    EXPECT_LE(max_abs_difference(build_dicke_dipole(d), build_H_D(d.rabi)), 1e-15);
    EXPECT_LE(max_abs_difference(build_dicke_standard(d), build_H_C_standard(d.rabi)), 1e-15);
    EXPECT_LE(max_abs_difference(build_dicke_correct(d, DickeMethod::closed_form),
                                 build_H_C_correct(d.rabi)),
              1e-15);
}

TEST(Dicke, CommutesWithCasimir) {
    const DickeParams d = dicke(3, 0.5, 15);
    const auto s = spin_ops(d.spin());
    const auto j2 = kron(s.jx * s.jx + s.jy * s.jy + s.jz * s.jz, OperatorMatrix::identity(16));
    for (const auto& h : {build_dicke_dipole(d), build_dicke_standard(d),
                          build_dicke_correct(d, DickeMethod::conjugation)}) {
        EXPECT_LE((j2 * h - h * j2).max_abs(), 1e-10);
    }
}

TEST(Dicke, DipoleIsInverseTransformOfCoulomb) {
    const DickeParams d = dicke(2, 0.4, 30);
    const auto u = dicke_rotation(d);
    const auto back = conjugate(u.adjoint(), build_dicke_correct(d, DickeMethod::conjugation));
    // Agreement on Fock levels well below the cutoff, up to the dropped constant N g_D²/ω_c.
    const double c = 2.0 * 0.4 * 0.4;
    const auto diff = (back - build_dicke_dipole(d)).matrix();
    double worst = 0.0;
    for (Index r = 0; r < diff.rows(); ++r)
        for (Index k = 0; k < diff.cols(); ++k)
            if (r % 31 < 10 && k % 31 < 10)
                worst = std::max(worst, std::abs(diff(r, k) - (r == k ? c : 0.0)));
    EXPECT_LE(worst, 1e-8);
}

TEST(Dicke, ConjugationEqualsClosedFormFactorTwo) {
    for (int n : {1, 2, 4}) {
        const DickeParams d = dicke(n, 0.4, 30);
        EXPECT_LE(max_abs_difference(build_dicke_correct(d, DickeMethod::conjugation),
                                     build_dicke_correct(d, DickeMethod::closed_form)),
                  1e-9);
    }
}

TEST(Dicke, FactorReport) {
    const auto r = dicke_factor_report(dicke(3, 0.3, 30));
    EXPECT_LE(r.deviation_factor_2, 1e-9);
    EXPECT_GT(r.deviation_factor_4, 1e-2);
    EXPECT_EQ(r.matching_factor, 2.0);
}

TEST(Dicke, StandardGoldenN4) {
    const auto t = transitions(build_dicke_standard(dicke(4, 0.3, 60)), 6);
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(t[k], golden::dicke4_standard_eta03[k], 1e-9);
}

TEST(Dicke, CorrectMatchesDipoleSpectrum) {
    const DickeParams d = dicke(3, 0.5, 60);
    EXPECT_LE(max_diff(transitions(build_dicke_dipole(d), 6),
                       transitions(build_dicke_correct(d, DickeMethod::closed_form), 6)),
              1e-8);
}

TEST(Dicke, RotationIsUnitary) {
    EXPECT_LE(unitarity_defect(dicke_rotation(dicke(2, 0.7, 20))), 1e-12);
}
