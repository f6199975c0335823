#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaugeqed {

// Every failure raised by the library carries one of these kinds. The CLI maps
// `validation` to exit code 1 and everything else to exit code 2.
enum class ErrorKind {
    validation,
    non_hermitian,
    not_unitary,
    convergence_failure,
    dimension_overflow,
    dimension_mismatch,
    grid_too_coarse,
    boundary_leak,
    basis_too_small,
    cutoff_ceiling,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    /// Message without the kind prefix that what() carries.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::validation, what);
}

}  // namespace gaugeqed
