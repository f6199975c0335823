#include "gaugeqed/errors.hpp"

namespace gaugeqed {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::validation: return "Validation";
        case ErrorKind::non_hermitian: return "NonHermitian";
        case ErrorKind::not_unitary: return "NotUnitary";
        case ErrorKind::convergence_failure: return "ConvergenceFailure";
        case ErrorKind::dimension_overflow: return "DimensionOverflow";
        case ErrorKind::dimension_mismatch: return "DimensionMismatch";
        case ErrorKind::grid_too_coarse: return "GridTooCoarse";
        case ErrorKind::boundary_leak: return "BoundaryLeak";
        case ErrorKind::basis_too_small: return "BasisTooSmall";
        case ErrorKind::cutoff_ceiling: return "CutoffCeiling";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gaugeqed
