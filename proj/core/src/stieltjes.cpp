#include "qws/stieltjes.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qws/quadrature.hpp"

namespace qws {

HalfPlanePoint::HalfPlanePoint(complexd z) : z_(z) {
    if (!(z.imag() > 0.0))
        throw std::invalid_argument("transform evaluation point must have Im z > 0");
}

complexd branch_sqrt(complexd z, double s) {
    const complexd ratio = s / z;
    return z * std::sqrt(1.0 - ratio * ratio);
}

complexd a_function(const HalfPlanePoint& z, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("a_function needs p > 0");
    const complexd zv = z.value();
    return (zv - branch_sqrt(zv, 2.0 * std::sqrt(p))) / (2.0 * p);
}

namespace {

complexd a_function_raw(complexd z, double p) {
    return (z - branch_sqrt(z, 2.0 * std::sqrt(p))) / (2.0 * p);
}

void check_off_cut(complexd z, double r) {
    if (std::abs(z - 1.0) < 1e-10 || std::abs(z + 1.0) < 1e-10)
        throw std::domain_error("transform evaluated at a pole (+-1)");
    if (std::abs(z.imag()) < 1e-10 && std::abs(z.real()) <= r + 1e-10)
        throw std::domain_error("transform evaluated on the support cut");
}

}  // namespace

complexd g_symmetric(complexd z, double r) {
    return g_asym(z, r, 0.0);
}

complexd g_asym(complexd z, double r, double c) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("transform needs r in (0,1)");
    check_off_cut(z, r);
    const double s = std::sqrt(1.0 - r * r);
    const complexd w = branch_sqrt(z, r);
    const complexd z2 = z * z;
    return ((z2 - r * r) * (z + c) - (1.0 + c * z) * s * w) / ((z2 - 1.0) * (z2 - r * r));
}

namespace {

complexd cf_finish(complexd z, const JacobiSeq& jacobi, int depth, complexd innermost) {
    complexd den = innermost;
    for (int level = depth - 2; level >= 0; --level) {
        if (!(std::abs(den) > 1e-300) || !std::isfinite(std::abs(den)))
            throw std::runtime_error("continued fraction depth-unstable: denominator collapsed");
        den = z - jacobi.beta(level) - jacobi.gamma(level) / den;
    }
    if (!(std::abs(den) > 1e-300) || !std::isfinite(std::abs(den)))
        throw std::runtime_error("continued fraction depth-unstable: denominator collapsed");
    return 1.0 / den;
}

}  // namespace

complexd cf_eval(const HalfPlanePoint& z, const JacobiSeq& jacobi, int depth) {
    if (depth < 1) throw std::invalid_argument("cf_eval needs depth >= 1");
    const complexd zv = z.value();
    return cf_finish(zv, jacobi, depth, zv - jacobi.beta(depth - 1));
}

complexd cf_eval_tail_closed(const HalfPlanePoint& z, const JacobiSeq& jacobi, int depth) {
    if (depth < 1) throw std::invalid_argument("cf_eval_tail_closed needs depth >= 1");
    const complexd zv = z.value();
    const complexd tail = a_function_raw(zv - jacobi.tail_beta, jacobi.tail_gamma);
    const complexd innermost = zv - jacobi.beta(depth - 1) - jacobi.gamma(depth - 1) * tail;
    return cf_finish(zv, jacobi, depth, innermost);
}

complexd g_general(const HalfPlanePoint& z, const GeneralJacobi& spec) {
    validate(MeasureSpec{spec});
    if (spec.head_beta != 0.0 || spec.tail_beta != 0.0)
        throw std::invalid_argument("g_general needs zero beta offsets; use g_general_asym");
    const auto& p = spec.head_gammas;
    const int n = static_cast<int>(p.size());
    const complexd zv = z.value();
    complexd prev = 1.0;  // Pi_{-1}
    complexd cur = zv - p[static_cast<std::size_t>(n - 1)] * a_function(z, spec.tail_gamma);  // Pi_0
    for (int k = 1; k <= n - 1; ++k) {
        const complexd next = zv * cur - p[static_cast<std::size_t>(n - k - 1)] * prev;
        prev = cur;
        cur = next;
    }
    if (!(std::abs(cur) > 1e-300)) throw std::runtime_error("general transform denominator collapsed");
    return prev / cur;
}

complexd g_head1(complexd z, double p0, double p) {
    const complexd w = branch_sqrt(z, 2.0 * std::sqrt(p));
    return 0.5 * ((2.0 * p - p0) * z - p0 * w) / ((p - p0) * z * z + p0 * p0);
}

complexd g_head2(complexd z, double p0, double p1, double p) {
    const complexd w = branch_sqrt(z, 2.0 * std::sqrt(p));
    return ((2.0 * p - p1) * z + p1 * w) / ((2.0 * p - p1) * z * z - 2.0 * p0 * p + p1 * z * w);
}

complexd g_head3(complexd z, double p0, double p1, double p2, double p) {
    const complexd w = branch_sqrt(z, 2.0 * std::sqrt(p));
    const complexd z2 = z * z;
    const complexd num = (2.0 * p - p2) * z2 - 2.0 * p1 * p + p2 * z * w;
    const complexd den = (2.0 * p - p2) * z2 * z + (p0 * p2 - 2.0 * p0 * p - 2.0 * p1 * p) * z
                       + p2 * (z2 - p0) * w;
    return num / den;
}

complexd g_general_asym(const HalfPlanePoint& z, const GeneralJacobi& spec) {
    validate(MeasureSpec{spec});
    if (spec.head_gammas.size() != 2)
        throw std::invalid_argument("g_general_asym needs exactly two head gammas");
    const double p0 = spec.head_gammas[0];
    const double p1 = spec.head_gammas[1];
    const double p = spec.tail_gamma;
    const double q0 = spec.head_beta;
    const double q = spec.tail_beta;
    const complexd zv = z.value();
    const complexd w = branch_sqrt(zv - q, 2.0 * std::sqrt(p));
    const complexd num = (2.0 * p - p1) * zv - q * (2.0 * p - p1) + p1 * w;
    const complexd den = (2.0 * p - p1) * (zv - q0) * (zv - q) - 2.0 * p0 * p + p1 * (zv - q0) * w;
    if (!(std::abs(den) > 1e-300)) throw std::runtime_error("general transform denominator collapsed");
    return num / den;
}

RhoFamily rho_family_of(const GeneralJacobi& spec) {
    const bool shifted = spec.head_beta != 0.0 || spec.tail_beta != 0.0;
    switch (spec.head_gammas.size()) {
        case 1:
            if (!shifted) return RhoFamily::k1;
            break;
        case 2:
            return shifted ? RhoFamily::k2_asym : RhoFamily::k2;
        case 3:
            if (!shifted) return RhoFamily::k3;
            break;
        default:
            break;
    }
    throw std::invalid_argument("no closed density family for this head length / offset combination");
}

std::pair<double, double> rho_support(const GeneralJacobi& spec) {
    const double half = 2.0 * std::sqrt(spec.tail_gamma);
    return {spec.tail_beta - half, spec.tail_beta + half};
}

double rho_prefactor(RhoFamily family, const GeneralJacobi& spec, double x) {
    const auto& g = spec.head_gammas;
    const double p = spec.tail_gamma;
    switch (family) {
        case RhoFamily::k1: {
            if (g.size() != 1 || spec.head_beta != 0.0 || spec.tail_beta != 0.0)
                throw std::invalid_argument("k1 density needs one head gamma and zero offsets");
            const double p0 = g[0];
            return p0 / ((p - p0) * x * x + p0 * p0) / (2.0 * pi);
        }
        case RhoFamily::k2: {
            if (g.size() != 2 || spec.head_beta != 0.0 || spec.tail_beta != 0.0)
                throw std::invalid_argument("k2 density needs two head gammas and zero offsets");
            const double p0 = g[0], p1 = g[1];
            const double x2 = x * x;
            const double den = (p - p1) * x2 * x2 + (p0 * (p1 - 2.0 * p) + p1 * p1) * x2 + p0 * p0 * p;
            return p0 * p1 / den / (2.0 * pi);
        }
        case RhoFamily::k3: {
            if (g.size() != 3 || spec.head_beta != 0.0 || spec.tail_beta != 0.0)
                throw std::invalid_argument("k3 density needs three head gammas and zero offsets");
            const double p0 = g[0], p1 = g[1], p2 = g[2];
            const double c1 = (p0 + p1) * (p2 - 2.0 * p) + (p0 + p2) * p2;
            const double c2 = (p0 + p1) * (p0 + p1) * p - p0 * p2 * (p0 + p1 + 2.0 * p2);
            const double x2 = x * x;
            // Constant term p0^2 p2^2: the value consistent with inverting
            // the three-level closed transform (rationalize numerator *
            // conj-branch denominator and the x-free term is p2^2 p0^2 * 4p
            // over 4p).
            const double den = (p - p2) * x2 * x2 * x2 + c1 * x2 * x2 + c2 * x2 + p0 * p0 * p2 * p2;
            return p0 * p1 * p2 / den / (2.0 * pi);
        }
        case RhoFamily::k2_asym: {
            if (g.size() != 2)
                throw std::invalid_argument("k2_asym density needs two head gammas");
            const double p0 = g[0], p1 = g[1];
            const double q0 = spec.head_beta, q = spec.tail_beta;
            const double u = x - q0, v = x - q;
            const double den = (p - p1) * u * u * v * v
                             + (p0 * (p1 - 2.0 * p) * v + p1 * p1 * u) * u + p0 * p0 * p;
            return p0 * p1 / den / (2.0 * pi);
        }
    }
    throw std::logic_error("unreachable");
}

double rho_closed(RhoFamily family, const GeneralJacobi& spec, double x) {
    const double p = spec.tail_gamma;
    const double q = spec.tail_beta;
    const double band = 4.0 * p - (x - q) * (x - q);
    if (band <= 0.0) return 0.0;
    return rho_prefactor(family, spec, x) * std::sqrt(band);
}

namespace {

// Integral of f(x) rho(x) dx over the support via x = q + 2 sqrt(p) sin(theta);
// the sqrt(4p - (x-q)^2) edge factor becomes 2 sqrt(p) cos(theta) exactly,
// so the integrand stays smooth through the endpoints.
template <class F>
auto integrate_rho(RhoFamily family, const GeneralJacobi& spec, F&& f) {
    const QuadratureRule& rule = measure_rule();
    const double half = 2.0 * std::sqrt(spec.tail_gamma);
    const double center = spec.tail_beta;
    using R = std::invoke_result_t<F&, double>;
    R acc{};
    for (int i = 0; i < measure_nodes; ++i) {
        const double theta = rule.nodes[i] * (pi / 2.0);
        const double cs = std::cos(theta);
        const double x = center + half * std::sin(theta);
        acc += rule.weights[i] * (pi / 2.0) * (half * cs) * (half * cs)
             * rho_prefactor(family, spec, x) * f(x);
    }
    return acc;
}

}  // namespace

double rho_total_mass(RhoFamily family, const GeneralJacobi& spec) {
    return integrate_rho(family, spec, [](double) { return 1.0; });
}

complexd transform_quadrature(const MeasureSpec& spec, complexd z) {
    if (std::holds_alternative<GeneralJacobi>(spec)) {
        const auto& gj = std::get<GeneralJacobi>(spec);
        return integrate_rho(rho_family_of(gj), gj, [z](double x) { return 1.0 / (z - x); });
    }
    return integrate_measure(spec, [z](double x) { return 1.0 / (z - x); });
}

double invert(const Transform& transform, double x, std::span<const double> eps_schedule) {
    const int n = static_cast<int>(eps_schedule.size());
    if (n < 2) throw std::invalid_argument("inversion needs at least two epsilon values");
    for (int i = 1; i < n; ++i)
        if (!(eps_schedule[i] < eps_schedule[i - 1]))
            throw std::invalid_argument("epsilon schedule must decrease");

    std::vector<double> tab(eps_schedule.size());
    for (int i = 0; i < n; ++i)
        tab[i] = -transform(complexd(x, eps_schedule[i])).imag() / pi;

    // Neville tableau evaluated at eps = 0.
    double previous = tab[n - 1];
    for (int level = 1; level < n; ++level) {
        for (int i = 0; i < n - level; ++i) {
            const double e_lo = eps_schedule[i + level];
            const double e_hi = eps_schedule[i];
            tab[i] = tab[i + 1] + (tab[i + 1] - tab[i]) * e_lo / (e_hi - e_lo);
        }
        if (level == n - 2) previous = tab[0];
    }
    if (std::abs(tab[0] - previous) > 1e-5)
        throw std::runtime_error("stieltjes inversion did not converge on the given schedule");
    return tab[0];
}

double asymptotic_check(const Transform& transform, const MomentSeq& moments, int M) {
    if (M > moments.max_order()) throw std::invalid_argument("asymptotic_check needs moments up to M");
    double worst = 0.0;
    for (double y : {10.0, 30.0, 100.0}) {
        const complexd z(0.0, y);
        complexd series = 0.0;
        complexd zpow = 1.0 / z;
        for (int m = 0; m <= M; ++m) {
            series += moments[m] * zpow;
            zpow /= z;
        }
        worst = std::max(worst, std::pow(y, M + 2) * std::abs(transform(z) - series));
    }
    return worst;
}

}  // namespace qws
