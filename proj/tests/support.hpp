#pragma once

#include <cmath>
#include <random>

#include "qws/coin.hpp"
#include "qws/walk.hpp"

namespace qws::testing {

/// Exactly unitary coin from the (theta, phi1, phi2, delta)
/// parametrization of U(2); every draw passes make_coin validation by
/// construction.
inline Coin random_coin(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.05, pi / 2.0 - 0.05);
    std::uniform_real_distribution<double> phase(-pi, pi);
    const double theta = angle(rng), phi1 = phase(rng), phi2 = phase(rng), delta = phase(rng);
    const complexd global = std::polar(1.0, delta);
    return make_coin(global * std::polar(std::cos(theta), phi1),
                     global * std::polar(std::sin(theta), phi2),
                     -global * std::polar(std::sin(theta), -phi2),
                     global * std::polar(std::cos(theta), -phi1));
}

inline QubitState random_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    complexd alpha(unit(rng), unit(rng)), beta(unit(rng), unit(rng));
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    return make_state(alpha / norm, beta / norm);
}

inline complexd random_upper_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-2.5, 2.5);
    std::uniform_real_distribution<double> im(0.5, 2.5);
    return {re(rng), im(rng)};
}

/// Brute-force dynamics oracle: apply all 2^n words in {P, Q} to the
/// initial state and bin amplitudes by (#right - #left). Exponential;
/// keep n <= 10 or so.
inline AmplitudeField path_sum_field(const Coin& coin, const QubitState& state, int n) {
    const auto [p, q] = split(coin);
    AmplitudeField field;
    field.time = n;
    field.amps.assign(static_cast<std::size_t>(2 * n + 1), Spinor{});
    for (std::uint64_t word = 0; word < (1ull << n); ++word) {
        Spinor v{state.alpha, state.beta};
        int x = 0;
        for (int i = 0; i < n; ++i) {
            if (word >> i & 1u) {
                v = q.apply(v);
                ++x;
            } else {
                v = p.apply(v);
                --x;
            }
        }
        field.amps[static_cast<std::size_t>(x + n)].left += v.left;
        field.amps[static_cast<std::size_t>(x + n)].right += v.right;
    }
    return field;
}

}  // namespace qws::testing
