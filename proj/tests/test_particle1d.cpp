#include "golden.hpp"
#include "oracles/oracles.hpp"
#include "test_support.hpp"

#include <gaugeqed/errors.hpp>
#include <gaugeqed/particle1d.hpp>
#include <gaugeqed/rabi.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace gaugeqed;
using testing_support::max_diff;
using testing_support::transitions;

namespace {

const Grid harmonic_grid{-12.0, 12.0, 961};
const Grid well_grid{-6.0, 6.0, 801};

const ParticleModel& harmonic10() {
    static const ParticleModel m = ParticleModel::harmonic(1.0, 1.0, harmonic_grid, 10);
    return m;
}
const MatterBasis& harmonic10_basis() {
    static const MatterBasis b = solve_particle(harmonic10());
    return b;
}
const ParticleModel& well50() {
    static const ParticleModel m = ParticleModel::double_well(2.0, 0.5, 1.0, well_grid, 50);
    return m;
}
const MatterBasis& well50_basis() {
    static const MatterBasis b = solve_particle(well50());
    return b;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no gaugeqed::Error thrown";
    return ErrorKind::validation;
}

}  // namespace

TEST(Particle, Validation) {
    EXPECT_EQ(kind_of([] { (void)ParticleModel::harmonic(1, 1, Grid{-5, 5, 101}, 4); }),
              ErrorKind::validation);
    EXPECT_EQ(kind_of([] { (void)ParticleModel::harmonic(1, -1, harmonic_grid, 4); }),
              ErrorKind::validation);
}

TEST(Particle, HarmonicLevels) {
    const MatterBasis& b = harmonic10_basis();
    for (int n = 0; n < 10; ++n) EXPECT_NEAR(b.energies[n] / (n + 0.5), 1.0, 1e-6) << n;
    EXPECT_NEAR(std::abs(b.x_elems(1, 0)), std::sqrt(0.5), 1e-6 * std::sqrt(0.5));
    EXPECT_NEAR(trk_sum(b, harmonic10(), 2), 1.0, 1e-6);
}

TEST(Particle, OrthonormalUnderTrapezoid) {
    const MatterBasis& b = harmonic10_basis();
    const double h = harmonic_grid.spacing();
    const RMatrix& psi = b.wavefunctions;
    RMatrix gram = h * psi.transpose() * psi;
    gram -= 0.5 * h * (psi.row(0).transpose() * psi.row(0) +
                       psi.row(psi.rows() - 1).transpose() * psi.row(psi.rows() - 1));
    EXPECT_LE((gram - RMatrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Particle, MatrixElementSymmetryAndVelocityForm) {
    const MatterBasis& b = well50_basis();
    EXPECT_LE((b.x_elems - b.x_elems.transpose()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(b.p_elems.real().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE((b.p_elems + b.p_elems.transpose()).cwiseAbs().maxCoeff(), 0.0);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double length = well50().mass * b.omega(i, j) * b.x_elems(i, j);
            const double velocity = b.p_elems(i, j).imag();
            if (std::abs(length) < 1e-6) {
                EXPECT_LE(std::abs(velocity), 1e-6);
            } else {
                EXPECT_NEAR(velocity / length, 1.0, 0.01) << i << "," << j;
            }
        }
    }
}

TEST(Particle, DoubleWellGolden) {
    const MatterBasis& b = well50_basis();
    EXPECT_NEAR(b.energies[0], golden::double_well_e0, 1e-6);
    EXPECT_NEAR(b.omega(1, 0), golden::double_well_omega10, 1e-6);
    EXPECT_NEAR(b.omega(2, 1), golden::double_well_omega21, 1e-6);
    EXPECT_NEAR(b.x_elems(1, 0), golden::double_well_x10, 1e-6);
    EXPECT_GE(b.omega(2, 1) / b.omega(1, 0), 4.0);
}

TEST(Particle, DoubleWellAgainstBasisOracle) {
    const auto ref = oracle::double_well_ho_basis(2.0, 0.5, 1.0);
    const MatterBasis& b = well50_basis();
    for (int n = 0; n < 6; ++n) EXPECT_NEAR(b.energies[n], ref.energies[n], 2e-6) << n;
    EXPECT_NEAR(b.x_elems(1, 0), std::abs(ref.x_elems(1, 0)), 1e-6);
}

TEST(Particle, TrkSum) {
    const MatterBasis& b = well50_basis();
    const double s = trk_sum(b, well50());
    EXPECT_GE(s, 0.999);
    EXPECT_NEAR(s, golden::double_well_trk50, 1e-6);
    double previous = 0.0;
    for (int m = 2; m <= 50; ++m) {
        const double sm = trk_sum(b, well50(), m);
        EXPECT_GE(sm, previous - 1e-15);
        previous = sm;
    }
    EXPECT_THROW(trk_sum(b, well50(), 1), Error);
}

TEST(Particle, NonlocalKernelTwoLevel) {
    const auto k = nonlocal_kernel(harmonic10_basis(), harmonic10(), 2);
    EXPECT_LE((k.values - k.values.transpose()).cwiseAbs().maxCoeff(), 0.0);
    const Eigen::JacobiSVD<RMatrix> svd(k.values);
    const auto& sv = svd.singularValues();
    EXPECT_LE(sv(2), 1e-10 * sv(0));
}

TEST(Particle, NonlocalityShrinksWithLevels) {
    const ParticleModel model = ParticleModel::harmonic(1.0, 1.0, harmonic_grid, 32);
    const MatterBasis b = solve_particle(model);
    double previous = 2.0;
    for (int k : {2, 4, 8, 16, 32}) {
        const double r = nonlocal_kernel(b, model, k).off_diagonality;
        EXPECT_LT(r, previous) << "k=" << k;
        previous = r;
    }
}

TEST(Particle, MinimalCouplingIdentity) {
    const auto zero = check_minimal_coupling_identity(harmonic10(), 0.0, 10, false);
    EXPECT_EQ(zero.raw_residual, 0.0);
    const auto r = check_minimal_coupling_identity(harmonic10(), 0.3);
    EXPECT_LE(r.relative_residual, 1e-6);
    EXPECT_LE(r.spectral_residual, 1e-9);
    EXPECT_GT(r.raw_residual, r.subspace_residual);
}

TEST(Particle, BoundaryLeakAndCoarseGrid) {
    EXPECT_EQ(kind_of([] {
                  (void)solve_particle(ParticleModel::harmonic(1, 1, Grid{-3, 3, 301}, 6));
              }),
              ErrorKind::boundary_leak);
    EXPECT_EQ(kind_of([] {
                  (void)solve_particle(ParticleModel::harmonic(1, 1, Grid{-40, 40, 201}, 6));
              }),
              ErrorKind::grid_too_coarse);
}

TEST(Particle, TabulatedPotential) {
    std::ostringstream text;
    text << "# x V\n";
    const Grid g{-6.0, 6.0, 401};
    for (int i = 0; i < g.n_points; ++i) text << g.x(i) << ' ' << 0.5 * g.x(i) * g.x(i) << '\n';
    std::istringstream in(text.str());
    const ParticleModel m = ParticleModel::from_table(in, 1.0, 4);
    EXPECT_EQ(m.grid.n_points, 401);
    EXPECT_EQ(m.name, "table");
    std::istringstream bad("1 2\n3\n");
    EXPECT_THROW(ParticleModel::from_table(bad, 1.0, 4), Error);
}

TEST(FullModel, DecoupledAtZeroField) {
    const MatterBasis& b = well50_basis();
    FullModelParams fp{1.0, 0.0, 3, 4, X2Treatment::full};
    const auto t = transitions(build_full_H_C(well50(), b, fp), 4);
    std::vector<double> expected;
    for (int i = 0; i < 3; ++i)
        for (int n = 0; n <= 4; ++n) expected.push_back(b.energies[i] + n - b.energies[0]);
    std::sort(expected.begin(), expected.end());
    expected.erase(expected.begin());
    expected.resize(4);
    EXPECT_LE(max_diff(t, expected), 1e-12);
    EXPECT_LE(max_diff(transitions(build_full_H_D(well50(), b, fp), 4), expected), 1e-12);
}

TEST(FullModel, TwoLevelReductionsMatchRabi) {
    const MatterBasis& b = harmonic10_basis();
    const double x10 = b.x_elems(1, 0);
    const double eta = 0.4;
    FullModelParams fp{1.0, eta / x10, 2, 30, X2Treatment::projected};
    RabiParams rp;
    rp.omega_10 = b.omega(1, 0);
    rp.eta = eta;
    rp.cutoff = 30;
    EXPECT_LE(max_diff(transitions(build_full_H_D(harmonic10(), b, fp), 6),
                       transitions(build_H_D(rp), 6)),
              1e-9);
    const double d = fp.a0 * fp.a0 / 2.0;
    EXPECT_LE(max_diff(transitions(build_full_H_C(harmonic10(), b, fp), 6),
                       transitions(build_H_C_standard(rp, d), 6)),
              1e-9);
}

TEST(FullModel, HarmonicGaugesAgreeWithEnoughLevels) {
    const MatterBasis& b = harmonic10_basis();
    FullModelParams fp{1.0, 0.3 / b.x_elems(1, 0), 10, 30, X2Treatment::full};
    EXPECT_LE(max_diff(transitions(build_full_H_D(harmonic10(), b, fp), 6),
                       transitions(build_full_H_C(harmonic10(), b, fp), 6)),
              1e-4);
}

TEST(FullModel, DoubleWellGapShrinksWithLevels) {
    const MatterBasis& b = well50_basis();
    const double wc = b.omega(1, 0);
    double previous = 1e300;
    double first = 0.0;
    double last = 0.0;
    for (int m : {2, 4, 8, 16}) {
        FullModelParams fp{wc, 0.3 / b.x_elems(1, 0), m, 30, X2Treatment::full};
        const double gap = max_diff(transitions(build_full_H_D(well50(), b, fp), 6),
                                    transitions(build_full_H_C(well50(), b, fp), 6)) /
                           wc;
        EXPECT_LT(gap, previous) << "M=" << m;
        if (m == 2) first = gap;
        last = gap;
        previous = gap;
    }
    EXPECT_LE(last, 1e-4);
    EXPECT_GT(first / last, 100.0);
}
