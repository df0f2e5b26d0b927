#pragma once

#include <complex>
#include <numbers>

namespace qws {

using complexd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Tolerance used when validating unitarity / normalization of inputs.
inline constexpr double unitarity_tol = 1e-12;

}  // namespace qws
