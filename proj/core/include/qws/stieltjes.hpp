#pragma once

#include <functional>
#include <span>
#include <utility>

#include "qws/common.hpp"
#include "qws/jacobi.hpp"
#include "qws/measure.hpp"
#include "qws/moments.hpp"

namespace qws {

/// Point with Im z > 0, the natural domain of every transform here.
/// Construction validates the half-plane invariant.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(complexd z);
    complexd value() const { return z_; }

private:
    complexd z_;
};

/// The branch of sqrt(z^2 - s^2) used throughout: z * principal_sqrt(1 -
/// s^2/z^2). It behaves like z at infinity and has positive imaginary
/// part on the upper half plane, which is what makes every transform
/// below map the upper half plane into the lower one. The naive
/// principal_sqrt(z^2 - s^2) breaks on the left half plane.
complexd branch_sqrt(complexd z, double s);

/// Resolvent of the constant-gamma chain:
/// A(z) = (z - sqrt(z^2 - 4p)) / (2p), the root of p A^2 - z A + 1 = 0
/// with Im A < 0 on the upper half plane.
complexd a_function(const HalfPlanePoint& z, double p);

/// Stieltjes transform of the symmetric measure,
/// G(z) = [z(z^2-r^2) - sqrt(1-r^2) sqrt(z^2-r^2)] / [(z^2-1)(z^2-r^2)].
/// Defined off the cut [-r, r]; rejects z within 1e-10 of +-1 or the cut.
complexd g_symmetric(complexd z, double r);

/// Stieltjes transform of mu(r,c),
/// G(z) = [(z^2-r^2)(z+c) - (1+cz) sqrt(1-r^2) sqrt(z^2-r^2)]
///        / [(z^2-1)(z^2-r^2)]; c = 0 reduces to g_symmetric.
complexd g_asym(complexd z, double r, double c);

/// Finite continued fraction 1/(z - beta_0 - gamma_0/(z - beta_1 - ...))
/// truncated after `depth` denominator levels, evaluated bottom-up
/// (backward recurrence — the stable direction for Stieltjes fractions).
/// Converges to the transform as depth grows for eventually-constant
/// sequences. Throws std::runtime_error if a denominator collapses
/// (depth-unstable; cannot happen off the real axis).
complexd cf_eval(const HalfPlanePoint& z, const JacobiSeq& jacobi, int depth);

/// Variant closing the fraction at `depth` with the constant-tail
/// resolvent: the innermost denominator is
/// z - beta_{depth-1} - gamma_{depth-1} * A(z - tail_beta; tail_gamma).
/// Exact (up to rounding) once every level >= depth carries tail values.
complexd cf_eval_tail_closed(const HalfPlanePoint& z, const JacobiSeq& jacobi, int depth);

/// Transform of the (p_0, ..., p_{n-1}, p)-case with zero betas, via the
/// polynomial recursion
///   Pi_{-1} = 1, Pi_0 = z - p_{n-1} A(z),
///   Pi_k = z Pi_{k-1} - p_{n-k-1} Pi_{k-2},  G = Pi_{n-2} / Pi_{n-1}.
complexd g_general(const HalfPlanePoint& z, const GeneralJacobi& spec);

/// Closed forms for one-, two- and three-level heads; cross-checks for
/// g_general. w below is branch_sqrt(z, 2 sqrt(p)).
complexd g_head1(complexd z, double p0, double p);
complexd g_head2(complexd z, double p0, double p1, double p);
complexd g_head3(complexd z, double p0, double p1, double p2, double p);

/// Two-level head with offsets beta_0 = q0, beta_{n>=1} = q:
/// G(z) = [(2p-p1)(z - q) + p1 w] /
///        [(2p-p1)(z-q0)(z-q) - 2 p0 p + p1 (z-q0) w],  w = branch_sqrt(z-q, 2 sqrt(p)).
/// Reduces to g_general when q0 = q = 0.
complexd g_general_asym(const HalfPlanePoint& z, const GeneralJacobi& spec);

enum class RhoFamily { k1, k2, k3, k2_asym };

/// Closed-form absolutely continuous densities of the general-case
/// measures on (q - 2 sqrt(p), q + 2 sqrt(p)) (q = 0 except k2_asym);
/// zero outside. Point masses outside the band (present for some
/// parameter ranges, e.g. p0 > 2p with one head level) are not part of
/// these densities. Throws std::invalid_argument when the head length
/// does not match the family.
double rho_closed(RhoFamily family, const GeneralJacobi& spec, double x);

/// rho without its sqrt(4p - (x-q)^2) edge factor; integrators multiply
/// the factor back in its exact cos(theta) form.
double rho_prefactor(RhoFamily family, const GeneralJacobi& spec, double x);

/// Support interval (q - 2 sqrt(p), q + 2 sqrt(p)) of a general measure.
std::pair<double, double> rho_support(const GeneralJacobi& spec);

RhoFamily rho_family_of(const GeneralJacobi& spec);

/// Quadrature of rho over its support; 1 exactly when the measure
/// carries no atoms.
double rho_total_mass(RhoFamily family, const GeneralJacobi& spec);

using Transform = std::function<complexd(complexd)>;

/// Quadrature oracle for the transform: integral of d mu(x) / (z - x),
/// through the closed density of whichever family the spec names.
complexd transform_quadrature(const MeasureSpec& spec, complexd z);

/// Density recovery -Im G(x + i eps)/pi extrapolated to eps = 0 through
/// the given decreasing schedule (Neville, generic powers of eps: the
/// expansion has a genuine linear term proportional to Re G' at interior
/// points). Keep x away from support endpoints (at least 0.02 or so);
/// derivative growth there inflates the extrapolation error. Throws
/// std::runtime_error when the last two extrapolants differ by more than
/// 1e-5 (non-convergence).
double invert(const Transform& transform, double x, std::span<const double> eps_schedule);

/// max over y in {10, 30, 100} of |y^{M+2} (G(iy) - sum_{m<=M} s_m (iy)^{-m-1})|.
/// Bounded for a transform whose measure has the given moments; grows
/// polynomially in y under a moment mismatch.
double asymptotic_check(const Transform& transform, const MomentSeq& moments, int M);

}  // namespace qws
