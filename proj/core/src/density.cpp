#include "qws/density.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qws/common.hpp"
#include "qws/quadrature.hpp"

namespace qws {

double density_k(double x, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("density_k needs r in (0,1)");
    const double ax = std::abs(x);
    if (ax > r) return 0.0;
    if (ax == r) return std::numeric_limits<double>::infinity();
    const double s = std::sqrt(1.0 - r * r);
    return s / (pi * (1.0 - x * x) * std::sqrt(r * r - x * x));
}

double density_mu(double x, const Asymmetric& spec) {
    return (1.0 + spec.c * x) * density_k(x, spec.r);
}

double density(const MeasureSpec& spec, double x) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) return density_k(x, sym->r);
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) return density_mu(x, *asym);
    throw std::invalid_argument("density handles Symmetric and Asymmetric specs only");
}

double cdf_mu(double t, const MeasureSpec& spec) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) return integrate_mu_cdf(sym->r, 0.0, t);
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) return integrate_mu_cdf(asym->r, asym->c, t);
    throw std::invalid_argument("cdf_mu handles Symmetric and Asymmetric specs only");
}

}  // namespace qws
