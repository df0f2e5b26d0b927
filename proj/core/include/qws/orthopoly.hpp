#pragma once

#include <vector>

#include "qws/jacobi.hpp"
#include "qws/measure.hpp"

namespace qws {

/// Monic polynomial in the monomial basis; coeffs[k] multiplies x^k and
/// the leading coefficient is exactly 1. Monomial coefficients are fine
/// at the degrees used here (<= 12).
struct MonicPoly {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;  // Horner
};

/// Values P_0(x)..P_n(x) of the monic orthogonal polynomials by the
/// three-term recurrence P_{k+1} = (x - beta_k) P_k - gamma_{k-1} P_{k-1}
/// (P_{-1} = 0, gamma_{-1} = 0). The beta offsets cover the asymmetric
/// families; symmetric sequences have them all zero.
std::vector<double> eval_polys(const JacobiSeq& jacobi, double x, int n);

/// Coefficient vectors of P_0..P_n via the same recurrence in the
/// coefficient domain.
std::vector<MonicPoly> monic_coeffs(const JacobiSeq& jacobi, int n);

/// Quadrature of P_m P_n against the measure. Vanishes (|.| < 1e-9) for
/// m != n when the sequence belongs to the measure; at m = n it equals
/// gamma_0 ... gamma_{n-1}.
double orthogonality_residual(const JacobiSeq& jacobi, const MeasureSpec& spec, int m, int n);

/// |(4 - 4xz + r^2 z^2) Q_N(x,z) - RHS| with Q_N the partial sum
/// sum_{n<=N} P_n(x) z^n for the symmetric family and
/// RHS = 4 + (r^2 - 4 + 4s) z^2 + (2 - 2s - r^2) x z^3, s = sqrt(1-r^2).
/// Decays with N for |z| < 1/2, |x| <= 1.
double genfun_residual(double x, double z, double r, int N);

}  // namespace qws
