#pragma once

#include <vector>

#include "qws/common.hpp"
#include "qws/measure.hpp"

namespace qws {

/// Raw moments s_0..s_M of a probability measure. For a positive measure
/// the Hankel matrices (s_{i+j}) are positive semidefinite.
struct MomentSeq {
    std::vector<double> values;

    int max_order() const { return static_cast<int>(values.size()) - 1; }
    double operator[](int m) const { return values[static_cast<std::size_t>(m)]; }
};

/// m-th moment of the symmetric measure: odd moments vanish and
/// s_{2m} = 1 - sqrt(1-r^2) * sum_{k<m} C(2k,k) (r^2/4)^k.
/// Central binomials run through the multiplicative recurrence
/// C(2k+2,k+1) = C(2k,k)*2(2k+1)/(k+1); exact integers would overflow
/// 64 bits near k = 31. Useful up to m ~ 40 in double precision —
/// beyond that, Hankel conditioning makes downstream Jacobi recovery
/// meaningless anyway.
double moment_closed(int m, double r);

/// m-th moment of mu(r,c): s_m(mu(r,0)) + c * s_{m+1}(mu(r,0)).
double moment_asym(int m, double r, double c);

/// Moment generating function sum_m s_m z^m in closed form, for
/// Symmetric and Asymmetric specs. Poles sit at +-1 and +-1/r; points
/// within 1e-8 of a pole are rejected. Related to the Stieltjes
/// transform by M(z) = G(1/z)/z.
complexd mgf(complexd z, const MeasureSpec& spec);

/// Independent oracle: integral of x^m against the measure via the
/// sin-substitution Gauss-Legendre rule.
double moment_quadrature(int m, const MeasureSpec& spec);

/// s_0..s_max_m from the closed forms.
MomentSeq moments_of(const MeasureSpec& spec, int max_m);

}  // namespace qws
