#pragma once

// Dense complex linear algebra for operators on finite Hilbert spaces.
//
// OperatorMatrix is an immutable value type wrapping an Eigen matrix. All
// spectral routines (hermitian_eig, matrix_function, unitary_exp) share one
// eigendecomposition path so that results are reproducible bit for bit.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gaugeqed {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr Index default_kron_dim_cap = 4096;

class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(CMatrix entries, bool hermitian_hint = false);
    explicit OperatorMatrix(const RMatrix& entries, bool hermitian_hint = false);

    static OperatorMatrix identity(Index dim);
    static OperatorMatrix zero(Index dim);
    static OperatorMatrix diagonal(const std::vector<double>& values);

    Index dim() const noexcept { return entries_.rows(); }
    const CMatrix& matrix() const noexcept { return entries_; }
    bool hermitian_hint() const noexcept { return hermitian_hint_; }
    Complex operator()(Index row, Index col) const { return entries_(row, col); }

    /// Largest absolute entry, ‖M‖_max.
    double max_abs() const;
    double frobenius_norm() const;

    /// max |M_ij - conj(M_ji)|.
    double hermiticity_defect() const;
    bool is_hermitian(double relative_tolerance = 1e-12) const;

    OperatorMatrix adjoint() const;
    Complex trace() const { return entries_.trace(); }

    friend OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
    friend OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
    friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
    friend OperatorMatrix operator*(double scale, const OperatorMatrix& op);
    friend OperatorMatrix operator*(Complex scale, const OperatorMatrix& op);

private:
    CMatrix entries_;
    bool hermitian_hint_ = false;
};

/// Largest absolute entrywise difference between two operators of equal size.
double max_abs_difference(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

struct Spectrum {
    std::vector<double> eigenvalues;     // ascending
    std::optional<CMatrix> eigenvectors; // columns, same order as eigenvalues
    std::string model_id;
    int cutoff = 0;

    /// E_n - E_0 for n = 1..count (clamped to the available levels).
    std::vector<double> transitions(std::size_t count) const;
};

struct EigOptions {
    bool compute_vectors = true;
    /// Relative tolerance for the Hermiticity check when the input carries no hint.
    double hermiticity_tolerance = 1e-12;
};

/// Full eigendecomposition of a Hermitian operator.
///
/// Eigenvalues come back ascending. Each eigenvector is phase-fixed so that its
/// largest-magnitude component (first one on ties) is real and positive.
/// Throws ErrorKind::non_hermitian or ErrorKind::convergence_failure.
Spectrum hermitian_eig(const OperatorMatrix& h, const EigOptions& options = {});

/// Real-symmetric variant used by the grid and fluxonium solvers.
struct RealEigensystem {
    Eigen::VectorXd values; // ascending
    RMatrix vectors;        // columns; sign fixed so the largest component is positive
};
RealEigensystem symmetric_eig(const RMatrix& h, bool compute_vectors = true);

/// f(H) = V f(Λ) V† for Hermitian H and a real scalar map f.
OperatorMatrix matrix_function(const OperatorMatrix& h, const std::function<double(double)>& f);

/// Real-symmetric counterpart of matrix_function.
RMatrix matrix_function(const RMatrix& h, const std::function<double(double)>& f);

/// exp(iθA) for Hermitian A, built as V exp(iθΛ) V†.
OperatorMatrix unitary_exp(const OperatorMatrix& a, double theta);

/// max |U†U - I|.
double unitarity_defect(const OperatorMatrix& u);

/// U H U†. Requires unitarity_defect(U) <= 1e-8 (ErrorKind::not_unitary otherwise).
/// When H carries a Hermitian hint the result is symmetrized and keeps the hint.
OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& h);

/// A ⊗ B with A's index varying slowest. ErrorKind::dimension_overflow above dim_cap.
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b,
                    Index dim_cap = default_kron_dim_cap);

/// Multiset distance between two ascending spectra: max_k |a_k - b_k| over the common prefix.
double spectral_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace gaugeqed
