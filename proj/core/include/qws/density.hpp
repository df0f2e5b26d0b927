#pragma once

#include "qws/measure.hpp"

namespace qws {

/// Limit density k(x:r) = sqrt(1-r^2) / (pi (1-x^2) sqrt(r^2-x^2)) on
/// (-r, r); zero outside. At |x| = r exactly the value is +infinity: the
/// point has measure zero and every integral here goes through the
/// sin-substitution, so a sentinel beats an error.
double density_k(double x, double r);

/// Density (1 + c x) k(x:r) of mu(r,c); non-negative on the support
/// because |c| <= 1/r.
double density_mu(double x, const Asymmetric& spec);

/// Dispatch for Symmetric/Asymmetric specs; rejects GeneralJacobi
/// (their densities are the rho families owned by the stieltjes module).
double density(const MeasureSpec& spec, double x);

/// CDF of mu(r,c) by singularity-removing quadrature; monotone, with
/// cdf(-r) = 0 and cdf(r) = 1 within 1e-10.
double cdf_mu(double t, const MeasureSpec& spec);

}  // namespace qws
