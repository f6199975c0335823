#pragma once

#include <gaugeqed/linalg.hpp>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

/// Seed for randomized property tests; override with GAUGEQED_TEST_SEED.
inline std::uint64_t seed() {
    if (const char* env = std::getenv("GAUGEQED_TEST_SEED")) return std::stoull(env);
    return 20240611u;
}

inline gaugeqed::CMatrix random_hermitian(gaugeqed::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    gaugeqed::CMatrix m(n, n);
    for (gaugeqed::Index i = 0; i < n; ++i)
        for (gaugeqed::Index j = 0; j < n; ++j) m(i, j) = {normal(rng), normal(rng)};
    return 0.5 * (m + m.adjoint());
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = a.size() == b.size() ? 0.0 : 1e300;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline std::vector<double> transitions(const gaugeqed::OperatorMatrix& h, std::size_t k) {
    return gaugeqed::hermitian_eig(h, {false}).transitions(k);
}

}  // namespace testing_support
