#include "gaugeqed/linalg.hpp"

#include "gaugeqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gaugeqed {

namespace {

template <typename Vec>
Index dominant_index(const Vec& column) {
    Index best = 0;
    double best_mag = -1.0;
    for (Index i = 0; i < column.size(); ++i) {
        const double mag = std::abs(column(i));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

void fix_phases(CMatrix& vectors) {
    for (Index k = 0; k < vectors.cols(); ++k) {
        const Complex pivot = vectors(dominant_index(vectors.col(k)), k);
        const double mag = std::abs(pivot);
        if (mag > 0.0) vectors.col(k) *= std::conj(pivot) / mag;
    }
}

void fix_signs(RMatrix& vectors) {
    for (Index k = 0; k < vectors.cols(); ++k) {
        if (vectors(dominant_index(vectors.col(k)), k) < 0.0) vectors.col(k) *= -1.0;
    }
}

void check_hermitian(const OperatorMatrix& h, double tolerance) {
    if (h.hermitian_hint()) return;
    const double scale = std::max(h.max_abs(), 1e-300);
    const double defect = h.hermiticity_defect();
    if (defect > tolerance * scale) {
        fail(ErrorKind::non_hermitian, "asymmetry " + std::to_string(defect) +
                                           " exceeds tolerance relative to max entry " +
                                           std::to_string(scale));
    }
}

Eigen::SelfAdjointEigenSolver<CMatrix> decompose(const OperatorMatrix& h, bool vectors) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(
        h.matrix(), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::convergence_failure,
             "Hermitian eigensolver did not converge (dim " + std::to_string(h.dim()) + ")");
    }
    return solver;
}

OperatorMatrix spectral_map(const OperatorMatrix& h, const auto& scalar_map) {
    check_hermitian(h, 1e-12);
    const auto solver = decompose(h, true);
    const CMatrix& v = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    Eigen::VectorXcd mapped(lambda.size());
    for (Index i = 0; i < lambda.size(); ++i) mapped(i) = scalar_map(lambda(i));
    CMatrix result = v * mapped.asDiagonal() * v.adjoint();
    return OperatorMatrix(std::move(result));
}

}  // namespace

OperatorMatrix::OperatorMatrix(CMatrix entries, bool hermitian_hint)
    : entries_(std::move(entries)), hermitian_hint_(hermitian_hint) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        fail(ErrorKind::dimension_mismatch, "operator matrix must be square with dim >= 1");
    }
}

OperatorMatrix::OperatorMatrix(const RMatrix& entries, bool hermitian_hint)
    : OperatorMatrix(CMatrix(entries.cast<Complex>()), hermitian_hint) {}

OperatorMatrix OperatorMatrix::identity(Index dim) {
    return OperatorMatrix(CMatrix(CMatrix::Identity(dim, dim)), true);
}

OperatorMatrix OperatorMatrix::zero(Index dim) {
    return OperatorMatrix(CMatrix(CMatrix::Zero(dim, dim)), true);
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<double>& values) {
    CMatrix m = CMatrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(static_cast<Index>(i), static_cast<Index>(i)) = values[i];
    }
    return OperatorMatrix(std::move(m), true);
}

double OperatorMatrix::max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

double OperatorMatrix::frobenius_norm() const { return entries_.norm(); }

double OperatorMatrix::hermiticity_defect() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_hermitian(double relative_tolerance) const {
    return hermiticity_defect() <= relative_tolerance * std::max(max_abs(), 1e-300);
}

OperatorMatrix OperatorMatrix::adjoint() const {
    return OperatorMatrix(CMatrix(entries_.adjoint()), hermitian_hint_);
}

OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) fail(ErrorKind::dimension_mismatch, "operator sum");
    return OperatorMatrix(CMatrix(lhs.entries_ + rhs.entries_),
                          lhs.hermitian_hint_ && rhs.hermitian_hint_);
}

OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) fail(ErrorKind::dimension_mismatch, "operator difference");
    return OperatorMatrix(CMatrix(lhs.entries_ - rhs.entries_),
                          lhs.hermitian_hint_ && rhs.hermitian_hint_);
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) fail(ErrorKind::dimension_mismatch, "operator product");
    return OperatorMatrix(CMatrix(lhs.entries_ * rhs.entries_), false);
}

OperatorMatrix operator*(double scale, const OperatorMatrix& op) {
    return OperatorMatrix(CMatrix(scale * op.entries_), op.hermitian_hint_);
}

OperatorMatrix operator*(Complex scale, const OperatorMatrix& op) {
    return OperatorMatrix(CMatrix(scale * op.entries_), op.hermitian_hint_ && scale.imag() == 0.0);
}

double max_abs_difference(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) fail(ErrorKind::dimension_mismatch, "max_abs_difference");
    return (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff();
}

std::vector<double> Spectrum::transitions(std::size_t count) const {
    std::vector<double> out;
    if (eigenvalues.empty()) return out;
    const std::size_t n = std::min(count, eigenvalues.size() - 1);
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back(eigenvalues[k] - eigenvalues[0]);
    return out;
}

Spectrum hermitian_eig(const OperatorMatrix& h, const EigOptions& options) {
    check_hermitian(h, options.hermiticity_tolerance);
    const auto solver = decompose(h, options.compute_vectors);
    Spectrum spectrum;
    const Eigen::VectorXd& values = solver.eigenvalues();
    spectrum.eigenvalues.assign(values.data(), values.data() + values.size());
    if (options.compute_vectors) {
        CMatrix vectors = solver.eigenvectors();
        fix_phases(vectors);
        spectrum.eigenvectors = std::move(vectors);
    }
    return spectrum;
}

RealEigensystem symmetric_eig(const RMatrix& h, bool compute_vectors) {
    if (h.rows() != h.cols() || h.rows() < 1) {
        fail(ErrorKind::dimension_mismatch, "symmetric_eig needs a square matrix");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(
        h, compute_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::convergence_failure, "symmetric eigensolver did not converge");
    }
    RealEigensystem out;
    out.values = solver.eigenvalues();
    if (compute_vectors) {
        out.vectors = solver.eigenvectors();
        fix_signs(out.vectors);
    }
    return out;
}

OperatorMatrix matrix_function(const OperatorMatrix& h, const std::function<double(double)>& f) {
    OperatorMatrix raw = spectral_map(h, [&](double x) { return Complex(f(x), 0.0); });
    // V f(Λ) V† is Hermitian up to rounding; make it exactly so.
    CMatrix sym = 0.5 * (raw.matrix() + raw.matrix().adjoint());
    return OperatorMatrix(std::move(sym), true);
}

RMatrix matrix_function(const RMatrix& h, const std::function<double(double)>& f) {
    const auto eig = symmetric_eig(h, true);
    Eigen::VectorXd mapped = eig.values.unaryExpr([&](double x) { return f(x); });
    RMatrix result = eig.vectors * mapped.asDiagonal() * eig.vectors.transpose();
    return 0.5 * (result + result.transpose());
}

OperatorMatrix unitary_exp(const OperatorMatrix& a, double theta) {
    if (theta == 0.0) return OperatorMatrix::identity(a.dim());
    return spectral_map(a, [&](double x) { return std::polar(1.0, theta * x); });
}

double unitarity_defect(const OperatorMatrix& u) {
    const CMatrix gram = u.matrix().adjoint() * u.matrix();
    return (gram - CMatrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff();
}

OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& h) {
    if (u.dim() != h.dim()) fail(ErrorKind::dimension_mismatch, "conjugate: U and H differ in size");
    const double defect = unitarity_defect(u);
    if (defect > 1e-8) {
        fail(ErrorKind::not_unitary, "max |U^dag U - I| = " + std::to_string(defect));
    }
    CMatrix result = u.matrix() * h.matrix() * u.matrix().adjoint();
    if (h.hermitian_hint()) {
        CMatrix sym = 0.5 * (result + result.adjoint());
        return OperatorMatrix(std::move(sym), true);
    }
    return OperatorMatrix(std::move(result), false);
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b, Index dim_cap) {
    const Index dim = a.dim() * b.dim();
    if (dim > dim_cap) {
        fail(ErrorKind::dimension_overflow,
             "kron dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dim_cap));
    }
    CMatrix out(dim, dim);
    const Index nb = b.dim();
    for (Index i = 0; i < a.dim(); ++i) {
        for (Index j = 0; j < a.dim(); ++j) {
            out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
        }
    }
    return OperatorMatrix(std::move(out), a.hermitian_hint() && b.hermitian_hint());
}

double spectral_distance(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace gaugeqed
