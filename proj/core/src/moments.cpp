#include "qws/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "qws/quadrature.hpp"

namespace qws {

double moment_closed(int m, double r) {
    if (m < 0) throw std::invalid_argument("moment index must be non-negative");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("moment_closed needs r in (0,1)");
    if (m % 2 == 1) return 0.0;
    const double s = std::sqrt(1.0 - r * r);
    const double q = r * r / 4.0;
    double sum = 0.0;
    double binom = 1.0;  // C(2k, k)
    double qk = 1.0;
    for (int k = 0; k < m / 2; ++k) {
        sum += binom * qk;
        binom *= 2.0 * (2.0 * k + 1.0) / (k + 1.0);
        qk *= q;
    }
    return 1.0 - s * sum;
}

double moment_asym(int m, double r, double c) {
    return moment_closed(m, r) + c * moment_closed(m + 1, r);
}

namespace {

complexd mgf_impl(complexd z, double r, double c) {
    const double s = std::sqrt(1.0 - r * r);
    for (double pole : {1.0, -1.0, 1.0 / r, -1.0 / r}) {
        if (std::abs(z - pole) < 1e-8)
            throw std::domain_error("mgf evaluated within 1e-8 of a pole");
    }
    const complexd z2 = z * z;
    const complexd root = std::sqrt(1.0 - r * r * z2);  // principal; fine inside |z| < 1/r
    return ((1.0 - r * r * z2) * (1.0 + c * z) - (z + c) * z * s * root)
         / ((1.0 - z2) * (1.0 - r * r * z2));
}

}  // namespace

complexd mgf(complexd z, const MeasureSpec& spec) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) return mgf_impl(z, sym->r, 0.0);
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) return mgf_impl(z, asym->r, asym->c);
    throw std::invalid_argument("mgf handles Symmetric and Asymmetric specs only");
}

double moment_quadrature(int m, const MeasureSpec& spec) {
    if (m < 0) throw std::invalid_argument("moment index must be non-negative");
    return integrate_measure(spec, [m](double x) { return std::pow(x, m); });
}

MomentSeq moments_of(const MeasureSpec& spec, int max_m) {
    MomentSeq seq;
    seq.values.reserve(max_m + 1);
    if (const auto* sym = std::get_if<Symmetric>(&spec)) {
        for (int m = 0; m <= max_m; ++m) seq.values.push_back(moment_closed(m, sym->r));
    } else if (const auto* asym = std::get_if<Asymmetric>(&spec)) {
        for (int m = 0; m <= max_m; ++m) seq.values.push_back(moment_asym(m, asym->r, asym->c));
    } else {
        throw std::invalid_argument("moments_of handles Symmetric and Asymmetric specs only");
    }
    return seq;
}

}  // namespace qws
