#include "qws/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature rule needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const QuadratureRule& measure_rule() {
    static const QuadratureRule rule = gauss_legendre(measure_nodes);
    return rule;
}

double integrate_mu_cdf(double r, double c, double t) {
    if (t <= -r) return 0.0;
    if (t >= r) return 1.0;
    const QuadratureRule& rule = measure_rule();
    const double s = std::sqrt(1.0 - r * r);
    const double lo = -pi / 2.0;
    const double hi = std::asin(t / r);
    const double mid = 0.5 * (lo + hi);
    const double halfwidth = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < measure_nodes; ++i) {
        const double theta = mid + halfwidth * rule.nodes[i];
        const double x = r * std::sin(theta);
        acc += rule.weights[i] * halfwidth * s * (1.0 + c * x) / (pi * (1.0 - x * x));
    }
    return acc;
}

}  // namespace qws
