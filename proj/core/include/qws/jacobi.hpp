#pragma once

#include <vector>

#include "qws/measure.hpp"
#include "qws/moments.hpp"

namespace qws {

/// Eventually-constant Jacobi coefficient sequence: listed head values
/// followed by the constant tail. beta(n)/gamma(n) fall back to the tail
/// beyond the listed head. These are simultaneously the offsets/products
/// of the monic three-term recurrence and the entries of the continued
/// fraction expansion of the Stieltjes transform.
struct JacobiSeq {
    std::vector<double> betas;
    std::vector<double> gammas;
    double tail_beta = 0.0;
    double tail_gamma = 0.0;

    double beta(int n) const {
        return n < static_cast<int>(betas.size()) ? betas[static_cast<std::size_t>(n)] : tail_beta;
    }
    double gamma(int n) const {
        return n < static_cast<int>(gammas.size()) ? gammas[static_cast<std::size_t>(n)] : tail_gamma;
    }
};

/// Symmetric family: all betas 0, gamma_0 = 1-s, gamma_1 = s(1-s)/2,
/// tail r^2/4, with s = sqrt(1-r^2).
JacobiSeq jacobi_symmetric(double r);

/// mu(r, 1): beta_0 = 1-s, beta_1 = -(1-s)/2, betas 0 afterwards;
/// gamma_0 = s(1-s), tail r^2/4.
JacobiSeq jacobi_c1(double r);

/// mu(r, 1/r): beta_0 = (1-s)/r, beta_1 = -(1-s)^2/(2r), betas 0
/// afterwards; gamma_0 = s(1-s)^2/r^2, tail r^2/4. The gamma_0 here is
/// the variance s_2 - s_1^2 and the c = 1/r evaluation of the general
/// head formula below; both the continued fraction and moment recovery
/// confirm it numerically.
JacobiSeq jacobi_c_inv_r(double r);

struct JacobiHead {
    double beta0, gamma0, beta1, gamma1;
};

/// First two levels for mu(r, c), 0 <= c <= 1/r (negative c via
/// reflection: betas negate, gammas are even in c). In s = sqrt(1-r^2):
///   beta_0 = c(1-s)
///   gamma_0 = (1-s)(1 - c^2 + c^2 s)
///   beta_1 = -c(1-s)(2 - 2c^2 - s + 2c^2 s) / (2(1 - c^2 + c^2 s))
///   gamma_1 = s(1-s)(2 - 2c^2 + c^2 s + c^2 s^2) / (4(1 - c^2 + c^2 s)^2)
/// Deeper levels have no closed form at general c; use
/// jacobi_from_moments for numerical values.
JacobiHead jacobi_head_general(double r, double c);

/// Recovers beta_0..beta_{count-1}, gamma_0..gamma_{count-1} from raw
/// moments by sequential monic orthogonalization in the moment
/// functional (<x^i, x^j> = s_{i+j}) — the Chebyshev algorithm organized
/// as Gram-Schmidt, which avoids the worst Hankel-ratio cancellations
/// and yields the monic polynomials as a by-product. Requires
/// moments.size() >= 2*count + 2. Throws std::runtime_error when a norm
/// collapses (gamma <= 0 or norm < 1e-13 * leading scale): raw-moment
/// conditioning grows exponentially, so keep count <= 8 for the walk
/// measures (error-vs-depth table in the repo README).
/// The returned tail values repeat the last recovered level.
JacobiSeq jacobi_from_moments(const MomentSeq& moments, int count);

/// Jacobi sequence of the reflected measure: betas negated, gammas kept.
JacobiSeq reflected(const JacobiSeq& seq);

/// The sequence a GeneralJacobi spec denotes.
JacobiSeq to_jacobi_seq(const GeneralJacobi& spec);

}  // namespace qws
