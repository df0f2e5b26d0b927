#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qws/common.hpp"
#include "qws/measure.hpp"

namespace qws {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the n-point rule by Newton iteration on P_n.
QuadratureRule gauss_legendre(int n);

/// Node count used by every measure integral in the toolkit; fixed for
/// reproducibility. The substituted integrands are analytic, so the rule
/// converges spectrally and 200 nodes reach machine precision.
inline constexpr int measure_nodes = 200;

const QuadratureRule& measure_rule();

/// Integral of f against mu(r, c) via the substitution x = r sin(theta),
/// which turns the edge-singular density into the analytic weight
/// s (1 + c x) / (pi (1 - x^2)) on theta in (-pi/2, pi/2).
template <class F>
auto integrate_mu(double r, double c, F&& f) {
    const QuadratureRule& rule = measure_rule();
    const double s = std::sqrt(1.0 - r * r);
    using R = std::invoke_result_t<F&, double>;
    R acc{};
    for (int i = 0; i < measure_nodes; ++i) {
        const double theta = rule.nodes[i] * (pi / 2.0);
        const double x = r * std::sin(theta);
        const double weight = s * (1.0 + c * x) / (pi * (1.0 - x * x));
        acc += rule.weights[i] * (pi / 2.0) * weight * f(x);
    }
    return acc;
}

/// Spec-dispatched variant; rejects GeneralJacobi (those measures are
/// integrated through their closed densities in the stieltjes module).
template <class F>
auto integrate_measure(const MeasureSpec& spec, F&& f) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) return integrate_mu(sym->r, 0.0, f);
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) return integrate_mu(asym->r, asym->c, f);
    throw std::invalid_argument("integrate_measure handles Symmetric and Asymmetric specs only");
}

/// Integral of mu(r, c) over (-r, t], same substitution with the theta
/// interval mapped to [-pi/2, asin(t/r)].
double integrate_mu_cdf(double r, double c, double t);

}  // namespace qws
