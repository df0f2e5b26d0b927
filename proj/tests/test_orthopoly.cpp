#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qws/grid.hpp"
#include "qws/orthopoly.hpp"

using namespace qws;

namespace {
const double h = 1.0 / std::sqrt(2.0);
const double sqrt2 = std::sqrt(2.0);

// Sign-change bisection on a fixed grid; adequate for degree <= 8.
std::vector<double> grid_zeros(const JacobiSeq& seq, int n) {
    std::vector<double> zeros;
    const std::vector<double> xs = linspace(-1.0, 1.0, 2001);
    double prev = eval_polys(seq, xs[0], n)[static_cast<std::size_t>(n)];
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double cur = eval_polys(seq, xs[i], n)[static_cast<std::size_t>(n)];
        if (prev == 0.0) prev = -cur;
        if ((prev < 0.0) != (cur < 0.0)) {
            double lo = xs[i - 1], hi = xs[i];
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = eval_polys(seq, mid, n)[static_cast<std::size_t>(n)];
                if ((fm < 0.0) == (prev < 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return zeros;
}
}  // namespace

TEST_CASE("recurrence base cases") {
    const JacobiSeq c1 = jacobi_c1(h);
    const std::vector<double> values = eval_polys(c1, 0.3, 1);
    CHECK(values[0] == 1.0);
    CHECK(values[1] == doctest::Approx(0.3 - c1.beta(0)).epsilon(1e-15));
    CHECK_THROWS_AS(eval_polys(c1, 0.3, -1), std::invalid_argument);
}

TEST_CASE("hadamard P2 value") {
    const std::vector<double> values = eval_polys(jacobi_symmetric(h), 0.5, 2);
    CHECK(values[2] == doctest::Approx(0.25 + (-2.0 + sqrt2) / 2.0).epsilon(1e-14));
}

TEST_CASE("odd-degree symmetric polynomials vanish at the origin") {
    const JacobiSeq seq = jacobi_symmetric(0.8);
    const std::vector<double> values = eval_polys(seq, 0.0, 9);
    for (int n = 1; n <= 9; n += 2) CHECK(values[static_cast<std::size_t>(n)] == 0.0);
}

TEST_CASE("hadamard coefficient table through degree six") {
    const std::vector<MonicPoly> polys = monic_coeffs(jacobi_symmetric(h), 6);
    CHECK(polys[0].coeffs == std::vector<double>{1.0});
    CHECK(polys[1].coeffs == std::vector<double>{0.0, 1.0});
    CHECK(polys[2].coeffs[0] == doctest::Approx((-2.0 + sqrt2) / 2.0).epsilon(1e-15));
    CHECK(polys[3].coeffs[1] == doctest::Approx((-3.0 + sqrt2) / 4.0).epsilon(1e-15));
    CHECK(polys[4].coeffs[0] == doctest::Approx((2.0 - sqrt2) / 16.0).epsilon(1e-15));
    CHECK(polys[4].coeffs[2] == doctest::Approx((-7.0 + 2.0 * sqrt2) / 8.0).epsilon(1e-15));
    CHECK(polys[5].coeffs[1] == doctest::Approx((7.0 - 3.0 * sqrt2) / 32.0).epsilon(1e-15));
    CHECK(polys[5].coeffs[3] == doctest::Approx((-4.0 + sqrt2) / 4.0).epsilon(1e-15));
    CHECK(polys[6].coeffs[0] == doctest::Approx((-2.0 + sqrt2) / 128.0).epsilon(1e-15));
    CHECK(polys[6].coeffs[2] == doctest::Approx((21.0 - 8.0 * sqrt2) / 64.0).epsilon(1e-15));
    CHECK(polys[6].coeffs[4] == doctest::Approx((-9.0 + 2.0 * sqrt2) / 8.0).epsilon(1e-15));
    for (const MonicPoly& p : polys) CHECK(p.coeffs.back() == 1.0);
    // Parity: coefficients of the opposite parity vanish identically.
    CHECK(polys[6].coeffs[1] == 0.0);
    CHECK(polys[6].coeffs[3] == 0.0);
    CHECK(polys[6].coeffs[5] == 0.0);
}

TEST_CASE("coefficient evaluation agrees with the value recurrence") {
    for (const JacobiSeq& seq : {jacobi_symmetric(h), jacobi_c1(0.6)}) {
        const std::vector<MonicPoly> polys = monic_coeffs(seq, 10);
        for (double x : linspace(-1.0, 1.0, 21)) {
            const std::vector<double> values = eval_polys(seq, x, 10);
            for (int n = 0; n <= 10; ++n)
                CHECK(std::abs(polys[static_cast<std::size_t>(n)].eval(x) - values[static_cast<std::size_t>(n)])
                      < 1e-12);
        }
    }
}

TEST_CASE("orthogonality residuals") {
    const JacobiSeq had = jacobi_symmetric(h);
    const MeasureSpec spec{Symmetric{h}};
    CHECK(std::abs(orthogonality_residual(had, spec, 1, 2)) < 1e-14);  // odd integrand
    CHECK(orthogonality_residual(had, spec, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    // Norm of P3 equals the product of the first three gammas:
    // ((2-sqrt2)/2)((sqrt2-1)/4)(1/8) = 0.0037912607362388306.
    CHECK(orthogonality_residual(had, spec, 3, 3)
          == doctest::Approx(0.0037912607362388306).epsilon(1e-12));
}

TEST_CASE("norm identity through degree six") {
    const JacobiSeq had = jacobi_symmetric(h);
    const MeasureSpec spec{Symmetric{h}};
    double product = 1.0;
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(orthogonality_residual(had, spec, n, n) - product) < 1e-9);
        product *= had.gamma(n);
    }
}

TEST_CASE("generating function residual vanishes at z = 0 and decays in N") {
    CHECK(genfun_residual(0.7, 0.0, h, 12) == 0.0);
    CHECK(genfun_residual(0.4, 0.3, h, 40) < 1e-10);
    CHECK(genfun_residual(-0.8, 0.25, 0.6, 40) < 1e-9);
    CHECK(genfun_residual(0.4, 0.3, h, 15) < genfun_residual(0.4, 0.3, h, 5));
    CHECK_THROWS_AS(genfun_residual(0.4, 0.3, h, 0), std::invalid_argument);
}

TEST_CASE("zeros of consecutive polynomials interlace") {
    const JacobiSeq had = jacobi_symmetric(h);
    for (int n = 1; n <= 7; ++n) {
        const std::vector<double> lower = grid_zeros(had, n);
        const std::vector<double> upper = grid_zeros(had, n + 1);
        REQUIRE(lower.size() == static_cast<std::size_t>(n));
        REQUIRE(upper.size() == static_cast<std::size_t>(n + 1));
        for (int k = 0; k < n; ++k) {
            CHECK(upper[static_cast<std::size_t>(k)] < lower[static_cast<std::size_t>(k)]);
            CHECK(lower[static_cast<std::size_t>(k)] < upper[static_cast<std::size_t>(k) + 1]);
        }
    }
}
