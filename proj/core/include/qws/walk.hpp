#pragma once

#include <span>
#include <vector>

#include "qws/coin.hpp"

namespace qws {

/// Exact walk state at a given time: one spinor per position
/// x in {-time, ..., time}, stored densely (parity-forbidden slots stay
/// zero; simplicity over the 2x memory saving).
struct AmplitudeField {
    int time = 0;
    std::vector<Spinor> amps;  // amps[x + time]

    const Spinor& at(int x) const { return amps[x + time]; }
};

/// P(X_n = x) for x in {-time, ..., time}, stored densely.
struct Distribution {
    int time = 0;
    std::vector<double> probs;  // probs[x + time]

    double at(int x) const { return probs[x + time]; }
};

AmplitudeField initial_field(const QubitState& state);

/// One update: the new amplitude at x is P*psi(x+1) + Q*psi(x-1).
/// Total probability is preserved.
AmplitudeField step(const AmplitudeField& field, const Coin& coin);

/// n applications of step starting from the delta field at the origin.
/// O(n) memory, O(n^2) time; equals the explicit sum over all 2^n P/Q
/// words (kept as a test oracle only, enumeration dies around n = 20).
AmplitudeField evolve(const Coin& coin, const QubitState& state, int n);

Distribution distribution(const AmplitudeField& field);

double total_probability(const AmplitudeField& field);

/// max over grid points t of |P(X_n/n <= t) - F(t)| where F is the CDF of
/// the limit measure for the given parameters. Grid points must lie in
/// (-1, 1); pick them away from +-r where the limit density diverges and
/// finite-n oscillation is worst. A convergence diagnostic, not a
/// fixed-tolerance quantity.
double rescaled_cdf_distance(const Distribution& dist, const LimitParams& params,
                             std::span<const double> grid);

}  // namespace qws
