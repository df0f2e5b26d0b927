#include "qws/walk.hpp"

#include <cmath>
#include <stdexcept>

#include "qws/density.hpp"

namespace qws {

AmplitudeField initial_field(const QubitState& state) {
    AmplitudeField field;
    field.time = 0;
    field.amps = {Spinor{state.alpha, state.beta}};
    return field;
}

AmplitudeField step(const AmplitudeField& field, const Coin& coin) {
    const int t = field.time;
    AmplitudeField next;
    next.time = t + 1;
    next.amps.assign(2 * t + 3, Spinor{});
    // next[x] = P*old[x+1] + Q*old[x-1]; P keeps the top row, Q the bottom.
    for (int i = 0; i <= 2 * t; ++i) {
        const Spinor& v = field.amps[i];
        const complexd left = coin.a * v.left + coin.b * v.right;
        const complexd right = coin.c * v.left + coin.d * v.right;
        next.amps[i].left += left;       // position (i - t) - 1
        next.amps[i + 2].right += right; // position (i - t) + 1
    }
    return next;
}

AmplitudeField evolve(const Coin& coin, const QubitState& state, int n) {
    if (n < 0) throw std::invalid_argument("evolve needs n >= 0");
    AmplitudeField field = initial_field(state);
    for (int i = 0; i < n; ++i) field = step(field, coin);
    return field;
}

Distribution distribution(const AmplitudeField& field) {
    Distribution dist;
    dist.time = field.time;
    dist.probs.resize(field.amps.size());
    for (std::size_t i = 0; i < field.amps.size(); ++i)
        dist.probs[i] = std::norm(field.amps[i].left) + std::norm(field.amps[i].right);
    return dist;
}

double total_probability(const AmplitudeField& field) {
    double total = 0.0;
    for (const Spinor& v : field.amps) total += std::norm(v.left) + std::norm(v.right);
    return total;
}

double rescaled_cdf_distance(const Distribution& dist, const LimitParams& params,
                             std::span<const double> grid) {
    const int n = dist.time;
    // The limit law (1 - c x) k(x:r) is mu(r, -c) in the (1 + c x) convention.
    const Asymmetric limit{params.r, -params.c};
    double worst = 0.0;
    for (double t : grid) {
        if (!(t > -1.0 && t < 1.0)) throw std::invalid_argument("grid points must lie in (-1, 1)");
        double empirical = 0.0;
        const double cutoff = t * n + 1e-12;
        for (int x = -n; x <= n; ++x) {
            if (x > cutoff) break;
            empirical += dist.at(x);
        }
        const double limit_cdf = cdf_mu(t, MeasureSpec{limit});
        worst = std::max(worst, std::abs(empirical - limit_cdf));
    }
    return worst;
}

}  // namespace qws
