#include "qws/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "qws/quadrature.hpp"

namespace qws {

double MonicPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

std::vector<double> eval_polys(const JacobiSeq& jacobi, double x, int n) {
    if (n < 0) throw std::invalid_argument("eval_polys needs n >= 0");
    std::vector<double> values(static_cast<std::size_t>(n) + 1);
    values[0] = 1.0;
    if (n == 0) return values;
    values[1] = x - jacobi.beta(0);
    for (int k = 1; k < n; ++k)
        values[k + 1] = (x - jacobi.beta(k)) * values[k] - jacobi.gamma(k - 1) * values[k - 1];
    return values;
}

std::vector<MonicPoly> monic_coeffs(const JacobiSeq& jacobi, int n) {
    if (n < 0) throw std::invalid_argument("monic_coeffs needs n >= 0");
    std::vector<MonicPoly> polys;
    polys.reserve(static_cast<std::size_t>(n) + 1);
    polys.push_back(MonicPoly{{1.0}});
    if (n == 0) return polys;
    polys.push_back(MonicPoly{{-jacobi.beta(0), 1.0}});
    for (int k = 1; k < n; ++k) {
        const auto& pk = polys[static_cast<std::size_t>(k)].coeffs;
        const auto& pm = polys[static_cast<std::size_t>(k) - 1].coeffs;
        std::vector<double> next(pk.size() + 1, 0.0);
        for (std::size_t i = 0; i < pk.size(); ++i) {
            next[i + 1] += pk[i];
            next[i] -= jacobi.beta(k) * pk[i];
        }
        const double gamma = jacobi.gamma(k - 1);
        for (std::size_t i = 0; i < pm.size(); ++i) next[i] -= gamma * pm[i];
        polys.push_back(MonicPoly{std::move(next)});
    }
    return polys;
}

double orthogonality_residual(const JacobiSeq& jacobi, const MeasureSpec& spec, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("polynomial indices must be non-negative");
    const int top = std::max(m, n);
    return integrate_measure(spec, [&](double x) {
        const std::vector<double> values = eval_polys(jacobi, x, top);
        return values[static_cast<std::size_t>(m)] * values[static_cast<std::size_t>(n)];
    });
}

double genfun_residual(double x, double z, double r, int N) {
    if (N < 1) throw std::invalid_argument("genfun_residual needs N >= 1");
    const JacobiSeq jacobi = jacobi_symmetric(r);
    const std::vector<double> values = eval_polys(jacobi, x, N);
    double q = 0.0;
    double zn = 1.0;
    for (int n = 0; n <= N; ++n) {
        q += values[static_cast<std::size_t>(n)] * zn;
        zn *= z;
    }
    const double s = std::sqrt(1.0 - r * r);
    const double lhs = (4.0 - 4.0 * x * z + r * r * z * z) * q;
    const double rhs = 4.0 + (r * r - 4.0 + 4.0 * s) * z * z + (2.0 - 2.0 * s - r * r) * x * z * z * z;
    return std::abs(lhs - rhs);
}

}  // namespace qws
