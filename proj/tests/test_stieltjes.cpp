#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "qws/density.hpp"
#include "qws/grid.hpp"
#include "qws/jacobi.hpp"
#include "qws/moments.hpp"
#include "qws/stieltjes.hpp"
#include "support.hpp"

using namespace qws;

namespace {
const double h = 1.0 / std::sqrt(2.0);
constexpr std::array<double, 5> eps5 = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
constexpr std::array<double, 3> eps3 = {1e-2, 1e-3, 1e-4};
}

TEST_CASE("half-plane points validate their invariant") {
    CHECK_THROWS_AS(HalfPlanePoint(complexd(1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(HalfPlanePoint(complexd(1.0, -0.5)), std::invalid_argument);
    CHECK(HalfPlanePoint(complexd(1.0, 0.5)).value() == complexd(1.0, 0.5));
}

TEST_CASE("branch sqrt: asymptotics, square, half-plane mapping") {
    std::mt19937_64 rng(61);
    const complexd far(0.0, 1e8);
    CHECK(std::abs(branch_sqrt(far, 0.9) / far - 1.0) < 1e-10);
    for (int i = 0; i < 100; ++i) {
        const complexd z = testing::random_upper_point(rng);
        const complexd w = branch_sqrt(z, 0.8);
        CHECK(w.imag() > 0.0);
        CHECK(std::abs(w * w - (z * z - 0.64)) < 1e-12 * std::abs(z * z));
    }
}

TEST_CASE("a_function satisfies its defining quadratic") {
    const double p = h * h / 4.0;
    const HalfPlanePoint z(complexd(0.0, 2.0));
    const complexd a = a_function(z, p);
    CHECK(std::abs(p * a * a - z.value() * a + 1.0) < 1e-12);
    CHECK(a.imag() < 0.0);
}

TEST_CASE("a_function tends to 1/z far away") {
    const HalfPlanePoint z(complexd(0.0, 1e6));
    CHECK(std::abs(a_function(z, 0.3) * z.value() - 1.0) < 1e-5);
}

TEST_CASE("a_function just above the real axis outside the band") {
    // At p = 1/4 the band is (-1, 1); A(2) = 2(2 - sqrt3) = 4 - 2 sqrt3.
    const complexd a = a_function(HalfPlanePoint(complexd(2.0, 0.001)), 0.25);
    CHECK(a.real() == doctest::Approx(4.0 - 2.0 * std::sqrt(3.0)).epsilon(1e-5));
    CHECK(a.imag() < 0.0);
    CHECK(a.imag() > -1e-2);
}

TEST_CASE("g_symmetric frozen value at z = 2 agrees with quadrature") {
    // 0.540678508996924: closed form and the 200-node rule agree to 2e-15.
    const complexd value = g_symmetric(complexd(2.0, 0.0), h);
    CHECK(value.real() == doctest::Approx(0.540678508996924).epsilon(1e-12));
    CHECK(value.imag() == 0.0);
    const complexd quad = transform_quadrature(MeasureSpec{Symmetric{h}}, complexd(2.0, 0.0));
    CHECK(std::abs(value - quad) < 1e-12);
}

TEST_CASE("g_symmetric decays like 1/z") {
    const complexd z(0.0, 1e6);
    CHECK(std::abs(z * g_symmetric(z, h) - 1.0) < 1e-5);
}

TEST_CASE("transforms reject poles and the cut") {
    CHECK_THROWS_AS(g_symmetric(complexd(1.0, 0.0), h), std::domain_error);
    CHECK_THROWS_AS(g_symmetric(complexd(-1.0, 1e-12), h), std::domain_error);
    CHECK_THROWS_AS(g_symmetric(complexd(0.3, 0.0), h), std::domain_error);
    CHECK_NOTHROW(g_symmetric(complexd(0.3, 0.5), h));
    CHECK_NOTHROW(g_symmetric(complexd(2.0, 0.0), h));
}

TEST_CASE("g_asym reduces, reflects, and matches quadrature") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 20; ++i) {
        const complexd z = testing::random_upper_point(rng);
        CHECK(std::abs(g_asym(z, h, 0.0) - g_symmetric(z, h)) < 1e-14);
        CHECK(std::abs(g_asym(z, h, -0.6) + g_asym(-z, h, 0.6)) < 1e-14);
    }
    const complexd z(2.0, 1.0);
    const complexd value = g_asym(z, h, 1.0);
    // Frozen from the quadrature oracle (agreement 2e-15).
    CHECK(value.real() == doctest::Approx(0.436533182781871).epsilon(1e-12));
    CHECK(value.imag() == doctest::Approx(-0.278704141221489).epsilon(1e-12));
    CHECK(std::abs(value - transform_quadrature(MeasureSpec{Asymmetric{h, 1.0}}, z)) < 1e-9);
}

TEST_CASE("every transform maps the upper half plane down") {
    std::mt19937_64 rng(63);
    const GeneralJacobi k2{{1.083925, 0.432441}, 0.630541};
    const GeneralJacobi k3{{0.479169, 1.143550, 2.625334}, 2.936586};
    const GeneralJacobi k2a{{0.4, 0.3}, 0.5, 0.2, -0.1};
    for (int i = 0; i < 100; ++i) {
        const complexd z = testing::random_upper_point(rng);
        const HalfPlanePoint zp(z);
        CHECK(g_symmetric(z, 0.3).imag() < 0.0);
        CHECK(g_symmetric(z, h).imag() < 0.0);
        CHECK(g_symmetric(z, 0.9).imag() < 0.0);
        CHECK(g_asym(z, h, 1.0).imag() < 0.0);
        CHECK(g_asym(z, 0.5, 2.0).imag() < 0.0);
        CHECK(a_function(zp, 0.7).imag() < 0.0);
        CHECK(g_general(zp, GeneralJacobi{{2.0}, 1.0}).imag() < 0.0);
        CHECK(g_general(zp, k2).imag() < 0.0);
        CHECK(g_general(zp, k3).imag() < 0.0);
        CHECK(g_general_asym(zp, k2a).imag() < 0.0);
        CHECK(cf_eval(zp, jacobi_symmetric(h), 80).imag() < 0.0);
    }
}

TEST_CASE("continued fraction basics") {
    const HalfPlanePoint z(complexd(0.7, 1.3));
    JacobiSeq trivial;
    trivial.tail_gamma = 0.25;
    CHECK(cf_eval(z, trivial, 1) == 1.0 / z.value());

    const JacobiSeq had = jacobi_symmetric(h);
    const HalfPlanePoint z2(complexd(0.0, 2.0));
    CHECK(std::abs(cf_eval(z2, had, 60) - g_symmetric(z2.value(), h)) < 1e-10);
    CHECK_THROWS_AS(cf_eval(z2, had, 0), std::invalid_argument);
}

TEST_CASE("tail closure makes shallow depth exact") {
    const JacobiSeq had = jacobi_symmetric(h);
    const HalfPlanePoint z(complexd(0.0, 2.0));
    CHECK(std::abs(cf_eval_tail_closed(z, had, 3) - g_symmetric(z.value(), h)) < 1e-13);
    CHECK(std::abs(cf_eval_tail_closed(z, had, 2) - g_symmetric(z.value(), h)) < 1e-13);

    const JacobiSeq c1 = jacobi_c1(h);
    const HalfPlanePoint z3(complexd(-0.4, 0.9));
    CHECK(std::abs(cf_eval_tail_closed(z3, c1, 2) - g_asym(z3.value(), h, 1.0)) < 1e-13);
}

TEST_CASE("continued fraction flags a collapsing denominator") {
    // gamma < 0 breaks the half-plane induction: at z = i the level-0
    // denominator hits exactly zero.
    JacobiSeq bad;
    bad.gammas = {-1.0};
    bad.tail_gamma = 0.25;
    CHECK_THROWS_AS(cf_eval(HalfPlanePoint(complexd(0.0, 1.0)), bad, 2), std::runtime_error);
}

TEST_CASE("g_general collapses to a_function for the constant chain") {
    std::mt19937_64 rng(64);
    for (int i = 0; i < 10; ++i) {
        const HalfPlanePoint z(testing::random_upper_point(rng));
        CHECK(std::abs(g_general(z, GeneralJacobi{{0.7}, 0.7}) - a_function(z, 0.7)) < 1e-14);
    }
}

TEST_CASE("g_general equals g_symmetric on the walk head") {
    std::mt19937_64 rng(65);
    for (double r : {0.3, h, 0.9}) {
        const double s = std::sqrt(1.0 - r * r);
        const GeneralJacobi head{{1.0 - s, s * (1.0 - s) / 2.0}, r * r / 4.0};
        for (int i = 0; i < 20; ++i) {
            const HalfPlanePoint z(testing::random_upper_point(rng));
            CHECK(std::abs(g_general(z, head) - g_symmetric(z.value(), r)) < 1e-11);
        }
    }
}

TEST_CASE("g_general matches the three closed head displays") {
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> par(0.1, 3.0);
    for (int draw = 0; draw < 5; ++draw) {
        const double p0 = par(rng), p1 = par(rng), p2 = par(rng), p = par(rng);
        for (int i = 0; i < 20; ++i) {
            const HalfPlanePoint z(testing::random_upper_point(rng));
            CHECK(std::abs(g_general(z, GeneralJacobi{{p0}, p}) - g_head1(z.value(), p0, p)) < 1e-12);
            CHECK(std::abs(g_general(z, GeneralJacobi{{p0, p1}, p}) - g_head2(z.value(), p0, p1, p)) < 1e-12);
            CHECK(std::abs(g_general(z, GeneralJacobi{{p0, p1, p2}, p}) - g_head3(z.value(), p0, p1, p2, p))
                  < 1e-12);
        }
    }
    CHECK_THROWS_AS(g_general(HalfPlanePoint(complexd(0, 1)), GeneralJacobi{{1.0}, 1.0, 0.5, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("offset two-level head: reduction, shift, continued fraction") {
    const GeneralJacobi base{{0.4, 0.3}, 0.5};
    const GeneralJacobi shifted{{0.4, 0.3}, 0.5, 0.375, 0.375};
    const GeneralJacobi offset{{0.4, 0.3}, 0.5, 0.2, -0.1};
    std::mt19937_64 rng(67);
    for (int i = 0; i < 20; ++i) {
        const complexd z = testing::random_upper_point(rng);
        const HalfPlanePoint zp(z);
        CHECK(std::abs(g_general_asym(zp, base) - g_general(zp, base)) < 1e-13);
        if (i < 10) {
            const HalfPlanePoint z_shift(z - 0.375);
            CHECK(std::abs(g_general_asym(zp, shifted) - g_general(z_shift, base)) < 1e-13);
        }
        CHECK(std::abs(g_general_asym(zp, offset) - cf_eval(zp, to_jacobi_seq(offset), 80)) < 1e-9);
    }
    CHECK_THROWS_AS(g_general_asym(HalfPlanePoint(complexd(0, 1)), GeneralJacobi{{1.0}, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("closed densities: arcsine case and the walk head") {
    const GeneralJacobi kesten{{2.0}, 1.0};
    for (double x : linspace(-1.9, 1.9, 41)) {
        CHECK(rho_closed(RhoFamily::k1, kesten, x)
              == doctest::Approx(1.0 / (pi * std::sqrt(4.0 - x * x))).epsilon(1e-13));
    }
    CHECK(rho_closed(RhoFamily::k1, kesten, 2.5) == 0.0);

    const double s = h;
    const GeneralJacobi walk_head{{1.0 - s, s * (1.0 - s) / 2.0}, h * h / 4.0};
    for (double x : linspace(-h + 0.05, h - 0.05, 41)) {
        CHECK(std::abs(rho_closed(RhoFamily::k2, walk_head, x) - density_k(x, h)) < 1e-10);
    }

    const GeneralJacobi offset{{0.4, 0.3}, 0.5};
    for (double x : linspace(-1.3, 1.3, 21))
        CHECK(rho_closed(RhoFamily::k2_asym, offset, x) == rho_closed(RhoFamily::k2, offset, x));

    CHECK_THROWS_AS(rho_closed(RhoFamily::k3, kesten, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rho_closed(RhoFamily::k1, walk_head, 0.0), std::invalid_argument);
}

TEST_CASE("closed densities carry unit mass for atomless draws") {
    CHECK(rho_total_mass(RhoFamily::k1, GeneralJacobi{{2.0}, 1.0}) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho_total_mass(RhoFamily::k2, GeneralJacobi{{1.083925, 0.432441}, 0.630541})
          == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho_total_mass(RhoFamily::k3, GeneralJacobi{{0.479169, 1.143550, 2.625334}, 2.936586})
          == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho_total_mass(RhoFamily::k2_asym, GeneralJacobi{{0.4, 0.3}, 0.5, 0.2, -0.1})
          == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("one-level head with p0 > 2p parks mass in atoms outside the band") {
    // The density formula still matches the inversion pointwise; only the
    // total mass drops (the two symmetric atoms hold the rest).
    const GeneralJacobi spec{{3.0}, 1.0};
    const double mass = rho_total_mass(RhoFamily::k1, spec);
    CHECK(mass < 1.0 - 1e-3);
    const Transform transform = [spec](complexd z) { return g_general(HalfPlanePoint(z), spec); };
    for (double x : {-1.0, 0.0, 0.8}) {
        CHECK(std::abs(invert(transform, x, eps5) - rho_closed(RhoFamily::k1, spec, x)) < 1e-6);
    }
}

TEST_CASE("random general draws: bounded mass, pointwise inversion consistency") {
    std::mt19937_64 rng(68);
    std::uniform_real_distribution<double> par(0.1, 3.0);
    int atom_draws = 0;
    for (int draw = 0; draw < 12; ++draw) {
        const GeneralJacobi spec{{par(rng), par(rng), par(rng)}, par(rng)};
        const double mass = rho_total_mass(RhoFamily::k3, spec);
        CHECK(mass < 1.0 + 1e-8);
        if (mass < 1.0 - 1e-6) {
            ++atom_draws;  // singular part present; mass test does not apply
        } else {
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        }
        const Transform transform = [spec](complexd z) { return g_general(HalfPlanePoint(z), spec); };
        const auto [lo, hi] = rho_support(spec);
        for (double x : {lo + 0.31 * (hi - lo), lo + 0.57 * (hi - lo)}) {
            const double density = rho_closed(RhoFamily::k3, spec, x);
            if (density < 10.0)
                CHECK(std::abs(invert(transform, x, eps5) - density) < 1e-5 + 1e-5 * density);
        }
    }
    MESSAGE("draws with singular part: ", atom_draws, "/12");
}

TEST_CASE("inversion recovers closed densities") {
    const Transform sym = [](complexd z) { return g_symmetric(z, h); };
    CHECK(std::abs(invert(sym, 0.0, eps3) - 1.0 / pi) < 1e-6);  // example schedule
    CHECK(std::abs(invert(sym, 0.0, eps5) - 1.0 / pi) < 1e-8);
    CHECK(std::abs(invert(sym, 0.9, eps5)) < 1e-8);  // off support

    const Transform kesten = [](complexd z) { return g_head1(z, 2.0, 1.0); };
    CHECK(std::abs(invert(kesten, 0.0, eps5) - 1.0 / (2.0 * pi)) < 1e-8);
}

TEST_CASE("inversion rejects bad schedules and flags divergence") {
    const Transform sym = [](complexd z) { return g_symmetric(z, h); };
    const std::array<double, 2> rising = {1e-4, 1e-3};
    CHECK_THROWS_AS(invert(sym, 0.0, rising), std::invalid_argument);
    const std::array<double, 1> single = {1e-3};
    CHECK_THROWS_AS(invert(sym, 0.0, single), std::invalid_argument);

    const Transform pole = [](complexd z) { return 1.0 / (z - 0.3); };
    CHECK_THROWS_AS(invert(pole, 0.3, eps5), std::runtime_error);
}

TEST_CASE("asymptotic moment expansion stays bounded and detects mismatch") {
    const Transform sym = [](complexd z) { return g_symmetric(z, h); };
    const MomentSeq moments = moments_of(MeasureSpec{Symmetric{h}}, 10);
    // Observed 1.01e-3 (the first omitted moment over the smallest y).
    CHECK(asymptotic_check(sym, moments, 8) < 0.01);
    CHECK(asymptotic_check(sym, moments, 0) < 0.05);

    MomentSeq wrong = moments;
    wrong.values[2] += 0.1;
    CHECK(asymptotic_check(sym, wrong, 8) > 1e6);
    CHECK_THROWS_AS(asymptotic_check(sym, moments, 11), std::invalid_argument);
}
