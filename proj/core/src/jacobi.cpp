#include "qws/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

namespace {

void check_r(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Jacobi family needs r in (0,1)");
}

}  // namespace

JacobiSeq jacobi_symmetric(double r) {
    check_r(r);
    const double s = std::sqrt(1.0 - r * r);
    JacobiSeq seq;
    seq.gammas = {1.0 - s, s * (1.0 - s) / 2.0};
    seq.tail_gamma = r * r / 4.0;
    return seq;
}

JacobiSeq jacobi_c1(double r) {
    check_r(r);
    const double s = std::sqrt(1.0 - r * r);
    JacobiSeq seq;
    seq.betas = {1.0 - s, -(1.0 - s) / 2.0};
    seq.gammas = {s * (1.0 - s)};
    seq.tail_gamma = r * r / 4.0;
    return seq;
}

JacobiSeq jacobi_c_inv_r(double r) {
    check_r(r);
    const double s = std::sqrt(1.0 - r * r);
    JacobiSeq seq;
    seq.betas = {(1.0 - s) / r, -(1.0 - s) * (1.0 - s) / (2.0 * r)};
    seq.gammas = {s * (1.0 - s) * (1.0 - s) / (r * r)};
    seq.tail_gamma = r * r / 4.0;
    return seq;
}

JacobiHead jacobi_head_general(double r, double c) {
    check_r(r);
    if (c < 0.0 || c * r > 1.0 + 1e-12)
        throw std::invalid_argument("jacobi_head_general needs 0 <= c <= 1/r; reflect for negative c");
    const double s = std::sqrt(1.0 - r * r);
    const double denom = 1.0 - c * c + c * c * s;
    if (denom < 1e-12)
        throw std::domain_error("boundary-degenerate parameters: 1 - c^2 + c^2 s vanishes");
    JacobiHead head;
    head.beta0 = c * (1.0 - s);
    head.gamma0 = (1.0 - s) * denom;
    head.beta1 = -c * (1.0 - s) * (2.0 - 2.0 * c * c - s + 2.0 * c * c * s) / (2.0 * denom);
    head.gamma1 = s * (1.0 - s) * (2.0 - 2.0 * c * c + c * c * s + c * c * s * s) / (4.0 * denom * denom);
    return head;
}

JacobiSeq jacobi_from_moments(const MomentSeq& moments, int count) {
    if (count < 1) throw std::invalid_argument("recovery needs count >= 1");
    const int needed = 2 * count + 2;
    if (static_cast<int>(moments.values.size()) < needed)
        throw std::invalid_argument("recovery needs at least 2*count + 2 moments");

    const auto& s = moments.values;
    auto inner = [&s](const std::vector<double>& p, const std::vector<double>& q) {
        double total = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) total += p[i] * q[j] * s[i + j];
        return total;
    };

    std::vector<std::vector<double>> polys;  // monomial coefficients, ascending
    polys.push_back({1.0});
    std::vector<double> norms;  // <P_n, P_n>
    JacobiSeq seq;

    for (int n = 0; n <= count; ++n) {
        const std::vector<double>& p = polys[static_cast<std::size_t>(n)];
        const double h = inner(p, p);
        if (!(h > 0.0) || (n > 0 && h < 1e-13 * norms.front()))
            throw std::runtime_error("moment recovery ill-conditioned: polynomial norm collapsed");
        norms.push_back(h);
        if (n >= 1) seq.gammas.push_back(norms[n] / norms[n - 1]);
        if (n == count) break;

        std::vector<double> xp(p.size() + 1, 0.0);  // x * P_n
        for (std::size_t i = 0; i < p.size(); ++i) xp[i + 1] = p[i];
        const double beta = inner(xp, p) / h;
        seq.betas.push_back(beta);

        // P_{n+1} = (x - beta_n) P_n - gamma_{n-1} P_{n-1}
        std::vector<double> next = xp;
        for (std::size_t i = 0; i < p.size(); ++i) next[i] -= beta * p[i];
        if (n >= 1) {
            const double gamma = norms[n] / norms[n - 1];
            const auto& prev = polys[static_cast<std::size_t>(n) - 1];
            for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= gamma * prev[i];
        }
        polys.push_back(std::move(next));
    }

    for (auto& g : seq.gammas)
        if (!(g > 0.0)) throw std::runtime_error("moment recovery ill-conditioned: gamma <= 0");
    seq.tail_beta = seq.betas.back();
    seq.tail_gamma = seq.gammas.back();
    return seq;
}

JacobiSeq reflected(const JacobiSeq& seq) {
    JacobiSeq out = seq;
    for (double& b : out.betas) b = -b;
    out.tail_beta = -out.tail_beta;
    return out;
}

JacobiSeq to_jacobi_seq(const GeneralJacobi& spec) {
    JacobiSeq seq;
    seq.betas = {spec.head_beta};
    seq.tail_beta = spec.tail_beta;
    seq.gammas = spec.head_gammas;
    seq.tail_gamma = spec.tail_gamma;
    return seq;
}

}  // namespace qws
