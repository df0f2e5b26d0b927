#pragma once

#include <variant>
#include <vector>

namespace qws {

/// Measure with density k(x:r) on (-r, r).
struct Symmetric {
    double r;
};

/// Measure mu(r,c) with density (1 + c x) k(x:r); c in [-1/r, 1/r].
struct Asymmetric {
    double r;
    double c;
};

/// Measure identified by an eventually-constant Jacobi sequence:
/// gamma_0..gamma_{n-1} = head_gammas, gamma_n = gamma_{n+1} = ... = tail_gamma,
/// beta_0 = head_beta, beta_1 = beta_2 = ... = tail_beta.
struct GeneralJacobi {
    std::vector<double> head_gammas;
    double tail_gamma;
    double head_beta = 0.0;
    double tail_beta = 0.0;
};

using MeasureSpec = std::variant<Symmetric, Asymmetric, GeneralJacobi>;

/// Throws std::invalid_argument when the parameters violate
/// 0 < r < 1, |c| <= 1/r, or positivity of the gamma values.
void validate(const MeasureSpec& spec);

}  // namespace qws
