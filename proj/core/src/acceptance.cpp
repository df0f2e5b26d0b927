#include "qws/acceptance.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "qws/coin.hpp"
#include "qws/density.hpp"
#include "qws/grid.hpp"
#include "qws/jacobi.hpp"
#include "qws/moments.hpp"
#include "qws/orthopoly.hpp"
#include "qws/quadrature.hpp"
#include "qws/stieltjes.hpp"
#include "qws/walk.hpp"

namespace qws {

namespace {

constexpr double sqrt2 = 1.4142135623730951;
constexpr double r_hadamard = 1.0 / sqrt2;

// ---------------------------------------------------------------
// Fixture table. Every non-obvious constant records how it was
// obtained; all were cross-checked against an independent route
// before being frozen here.
// ---------------------------------------------------------------

// Inversion schedule: five decreasing epsilons, Neville-extrapolated to
// zero. Chosen so the worst-case error over every density family below
// stays under 1e-8 on the comparison grids (the three-point schedule
// 1e-2..1e-4 only reaches ~1e-5 for narrow supports).
constexpr std::array<double, 5> inversion_schedule = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};

// General-case parameter draws, picked (seeded search) so the measure is
// atomless: the closed density integrates to 1 within 1e-10 by the
// 200-node rule, and its peak stays below ~1 so absolute comparisons are
// meaningful.
const GeneralJacobi kesten_draw{{2.0}, 1.0};                                  // arcsine on (-2, 2)
const GeneralJacobi k2_draw{{1.083925, 0.432441}, 0.630541};
const GeneralJacobi k3_draw{{0.479169, 1.143550, 2.625334}, 2.936586};
const GeneralJacobi k2_asym_draw{{0.4, 0.3}, 0.5, 0.2, -0.1};

// Walk convergence fixture: max CDF deviation on the 41-point grid at
// n = 2000 was observed at 1.12e-3 (and 1.49e-2 at n = 100); the bound
// keeps headroom for platform-level rounding differences.
constexpr double walk_distance_bound = 0.02;

struct Check {
    bool ok = true;
    double worst = 0.0;

    void add(double err, double tol) {
        worst = std::max(worst, err);
        if (!(err < tol)) ok = false;
    }
};

std::string describe(const Check& check, double tol) {
    std::ostringstream os;
    os << "max|diff| = " << check.worst << " (limit " << tol << ")";
    return os.str();
}

complexd random_upper_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-2.5, 2.5);
    std::uniform_real_distribution<double> im(0.5, 2.5);
    return {re(rng), im(rng)};
}

CriterionResult run_guarded(int id, const std::string& name,
                            const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult result;
    result.id = id;
    result.name = name;
    try {
        auto [ok, detail] = body();
        result.passed = ok;
        result.detail = detail;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

// Exhaustive path-sum oracle: apply every length-n word in {P, Q} to the
// initial state and accumulate amplitudes by (#right - #left). Only
// usable for small n; the criterion runs it up to n = 10.
AmplitudeField path_sum_field(const Coin& coin, const QubitState& state, int n) {
    const auto [p, q] = split(coin);
    AmplitudeField field;
    field.time = n;
    field.amps.assign(static_cast<std::size_t>(2 * n + 1), Spinor{});
    const std::uint64_t words = 1ull << n;
    for (std::uint64_t word = 0; word < words; ++word) {
        Spinor v{state.alpha, state.beta};
        int x = 0;
        for (int stepi = 0; stepi < n; ++stepi) {
            if (word >> stepi & 1u) {
                v = q.apply(v);
                x += 1;
            } else {
                v = p.apply(v);
                x -= 1;
            }
        }
        field.amps[static_cast<std::size_t>(x + n)].left += v.left;
        field.amps[static_cast<std::size_t>(x + n)].right += v.right;
    }
    return field;
}

// --------------------------- criteria ---------------------------

std::pair<bool, std::string> moment_agreement() {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    for (double r : {0.3, r_hadamard, 0.9}) {
        const MeasureSpec spec = Symmetric{r};
        for (int m = 0; m <= 20; ++m)
            check.add(std::abs(moment_closed(m, r) - moment_quadrature(m, spec)), 1e-9);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 1.0) check.ok = false;
    std::ostringstream os;
    os << describe(check, 1e-9) << ", runtime " << seconds << " s (limit 1 s)";
    return {check.ok, os.str()};
}

std::pair<bool, std::string> hadamard_recovery() {
    const JacobiSeq recovered = jacobi_from_moments(moments_of(Symmetric{r_hadamard}, 12), 5);
    const std::array<double, 5> expected = {(2.0 - sqrt2) / 2.0, (sqrt2 - 1.0) / 4.0, 0.125, 0.125, 0.125};
    Check check;
    for (int n = 0; n < 5; ++n) check.add(std::abs(recovered.gamma(n) - expected[static_cast<std::size_t>(n)]), 1e-6);
    return {check.ok, describe(check, 1e-6)};
}

std::pair<bool, std::string> transform_triple() {
    struct Family {
        std::string name;
        MeasureSpec spec;
        JacobiSeq seq;
        Transform closed;
    };
    std::vector<Family> families;
    for (double r : {0.3, r_hadamard, 0.9})
        families.push_back({"symmetric", Symmetric{r}, jacobi_symmetric(r),
                            [r](complexd z) { return g_symmetric(z, r); }});
    families.push_back({"c=1", Asymmetric{r_hadamard, 1.0}, jacobi_c1(r_hadamard),
                        [](complexd z) { return g_asym(z, r_hadamard, 1.0); }});
    families.push_back({"c=1/r", Asymmetric{0.5, 2.0}, jacobi_c_inv_r(0.5),
                        [](complexd z) { return g_asym(z, 0.5, 2.0); }});
    for (const GeneralJacobi& gj : {kesten_draw, k2_draw, k3_draw})
        families.push_back({"general", gj, to_jacobi_seq(gj),
                            [gj](complexd z) { return g_general(HalfPlanePoint(z), gj); }});
    families.push_back({"general-asym", k2_asym_draw, to_jacobi_seq(k2_asym_draw),
                        [](complexd z) { return g_general_asym(HalfPlanePoint(z), k2_asym_draw); }});

    std::mt19937_64 rng(0x5eed0003);
    Check check;
    for (const Family& family : families) {
        for (int i = 0; i < 20; ++i) {
            const complexd z = random_upper_point(rng);
            const complexd closed = family.closed(z);
            const complexd cf = cf_eval(HalfPlanePoint(z), family.seq, 80);
            const complexd quad = transform_quadrature(family.spec, z);
            check.add(std::abs(closed - cf), 1e-8);
            check.add(std::abs(closed - quad), 1e-8);
            check.add(std::abs(cf - quad), 1e-8);
        }
    }
    // No closed Jacobi tail exists at intermediate c, so that family is
    // held to the closed-vs-quadrature pair only.
    for (int i = 0; i < 20; ++i) {
        const complexd z = random_upper_point(rng);
        check.add(std::abs(g_asym(z, 0.6, 0.5) - transform_quadrature(MeasureSpec{Asymmetric{0.6, 0.5}}, z)), 1e-8);
    }
    return {check.ok, describe(check, 1e-8)};
}

std::pair<bool, std::string> head_recursion() {
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_real_distribution<double> par(0.1, 3.0);
    Check check;
    for (int draw = 0; draw < 10; ++draw) {
        const double p0 = par(rng), p1 = par(rng), p2 = par(rng), p = par(rng);
        for (int i = 0; i < 20; ++i) {
            const HalfPlanePoint z(random_upper_point(rng));
            check.add(std::abs(g_general(z, GeneralJacobi{{p0}, p}) - g_head1(z.value(), p0, p)), 1e-12);
            check.add(std::abs(g_general(z, GeneralJacobi{{p0, p1}, p}) - g_head2(z.value(), p0, p1, p)), 1e-12);
            check.add(std::abs(g_general(z, GeneralJacobi{{p0, p1, p2}, p}) - g_head3(z.value(), p0, p1, p2, p)),
                      1e-12);
        }
    }
    Check walk_head;
    for (double r : {0.3, r_hadamard, 0.9}) {
        const double s = std::sqrt(1.0 - r * r);
        const GeneralJacobi head{{1.0 - s, s * (1.0 - s) / 2.0}, r * r / 4.0};
        for (int i = 0; i < 20; ++i) {
            const HalfPlanePoint z(random_upper_point(rng));
            walk_head.add(std::abs(g_general(z, head) - g_symmetric(z.value(), r)), 1e-11);
        }
    }
    std::ostringstream os;
    os << "closed-form " << describe(check, 1e-12) << "; walk-head " << describe(walk_head, 1e-11);
    return {check.ok && walk_head.ok, os.str()};
}

std::pair<bool, std::string> inversion_consistency() {
    struct Family {
        Transform transform;
        std::function<double(double)> density;
        double lo, hi;
    };
    std::vector<Family> families;
    for (double r : {0.3, r_hadamard})
        families.push_back({[r](complexd z) { return g_symmetric(z, r); },
                            [r](double x) { return density_k(x, r); }, -r, r});
    for (auto [r, c] : {std::pair{r_hadamard, 1.0}, std::pair{0.5, 2.0}})
        families.push_back({[r = r, c = c](complexd z) { return g_asym(z, r, c); },
                            [r = r, c = c](double x) { return density_mu(x, Asymmetric{r, c}); }, -r, r});
    for (const GeneralJacobi& gj : {kesten_draw, k2_draw, k3_draw, k2_asym_draw}) {
        const RhoFamily family = rho_family_of(gj);
        const auto [lo, hi] = rho_support(gj);
        const Transform transform =
            gj.head_gammas.size() == 2 && (gj.head_beta != 0.0 || gj.tail_beta != 0.0)
                ? Transform([gj](complexd z) { return g_general_asym(HalfPlanePoint(z), gj); })
                : Transform([gj](complexd z) { return g_general(HalfPlanePoint(z), gj); });
        families.push_back({transform, [gj, family](double x) { return rho_closed(family, gj, x); }, lo, hi});
    }

    Check check;
    for (const Family& family : families) {
        const double margin = 0.05 * (family.hi - family.lo);
        for (double x : linspace(family.lo + margin, family.hi - margin, 41))
            check.add(std::abs(invert(family.transform, x, inversion_schedule) - family.density(x)), 1e-6);
    }

    // Arcsine spot value at the origin: rho for the one-level head
    // (p0, p) = (2, 1) is 1/(pi sqrt(4 - x^2)), so the density at 0 is
    // 1/(2 pi).
    const double spot = invert([](complexd z) { return g_head1(z, 2.0, 1.0); }, 0.0, inversion_schedule);
    Check spot_check;
    spot_check.add(std::abs(spot - 1.0 / (2.0 * pi)), 1e-8);
    std::ostringstream os;
    os << "grids " << describe(check, 1e-6) << "; arcsine spot " << describe(spot_check, 1e-8);
    return {check.ok && spot_check.ok, os.str()};
}

std::pair<bool, std::string> orthogonality_suite() {
    struct Family {
        JacobiSeq seq;
        MeasureSpec spec;
    };
    const std::vector<Family> families = {
        {jacobi_symmetric(r_hadamard), Symmetric{r_hadamard}},
        {jacobi_c1(r_hadamard), Asymmetric{r_hadamard, 1.0}},
    };
    Check off_diag, norms;
    for (const Family& family : families) {
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; n < m; ++n)
                off_diag.add(std::abs(orthogonality_residual(family.seq, family.spec, m, n)), 1e-9);
        double norm_product = 1.0;
        for (int n = 0; n <= 6; ++n) {
            norms.add(std::abs(orthogonality_residual(family.seq, family.spec, n, n) - norm_product), 1e-9);
            norm_product *= family.seq.gamma(n);
        }
    }
    std::ostringstream os;
    os << "off-diagonal " << describe(off_diag, 1e-9) << "; norms " << describe(norms, 1e-9);
    return {off_diag.ok && norms.ok, os.str()};
}

std::pair<bool, std::string> generating_function() {
    Check check;
    check.add(genfun_residual(0.4, 0.3, r_hadamard, 40), 1e-9);
    check.add(genfun_residual(-0.8, 0.25, 0.6, 40), 1e-9);
    // The two closed coefficients specialize at r = 1/sqrt2 to
    // -7/2 + 2 sqrt2 and 3/2 - sqrt2 = (1 - s)^2.
    const double s = std::sqrt(1.0 - r_hadamard * r_hadamard);
    Check coeffs;
    coeffs.add(std::abs((r_hadamard * r_hadamard - 4.0 + 4.0 * s) - (-3.5 + 2.0 * sqrt2)), 1e-14);
    coeffs.add(std::abs((2.0 - 2.0 * s - r_hadamard * r_hadamard) - (1.5 - sqrt2)), 1e-14);
    std::ostringstream os;
    os << "residuals " << describe(check, 1e-9) << "; hadamard coefficients " << describe(coeffs, 1e-14);
    return {check.ok && coeffs.ok, os.str()};
}

std::pair<bool, std::string> polynomial_table() {
    const std::vector<MonicPoly> polys = monic_coeffs(jacobi_symmetric(r_hadamard), 6);
    const std::vector<std::vector<double>> expected = {
        {1.0},
        {0.0, 1.0},
        {(-2.0 + sqrt2) / 2.0, 0.0, 1.0},
        {0.0, (-3.0 + sqrt2) / 4.0, 0.0, 1.0},
        {(2.0 - sqrt2) / 16.0, 0.0, (-7.0 + 2.0 * sqrt2) / 8.0, 0.0, 1.0},
        {0.0, (7.0 - 3.0 * sqrt2) / 32.0, 0.0, (-4.0 + sqrt2) / 4.0, 0.0, 1.0},
        {(-2.0 + sqrt2) / 128.0, 0.0, (21.0 - 8.0 * sqrt2) / 64.0, 0.0, (-9.0 + 2.0 * sqrt2) / 8.0, 0.0, 1.0},
    };
    Check check;
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (polys[n].coeffs.size() != expected[n].size()) return {false, "degree mismatch"};
        for (std::size_t k = 0; k < expected[n].size(); ++k)
            check.add(std::abs(polys[n].coeffs[k] - expected[n][k]), 1e-14);
    }
    return {check.ok, describe(check, 1e-14)};
}

std::pair<bool, std::string> walk_convergence() {
    const auto start = std::chrono::steady_clock::now();
    const Coin coin = hadamard_coin();
    const QubitState state = make_state(1.0 / sqrt2, complexd(0.0, 1.0 / sqrt2));
    const LimitParams params = limit_params(coin, state);
    const std::array<double, 2> exclusions = {-params.r, params.r};
    const std::vector<double> grid = interior_grid(-0.95, 0.95, 41, exclusions, 0.02);

    const double d100 = rescaled_cdf_distance(distribution(evolve(coin, state, 100)), params, grid);
    const double d2000 = rescaled_cdf_distance(distribution(evolve(coin, state, 2000)), params, grid);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool ok = d2000 < d100 && d2000 < walk_distance_bound && seconds < 30.0;
    std::ostringstream os;
    os << "distance " << d100 << " (n=100) -> " << d2000 << " (n=2000), bound " << walk_distance_bound
       << ", runtime " << seconds << " s (limit 30 s)";
    return {ok, os.str()};
}

std::pair<bool, std::string> path_sum_dynamics() {
    const std::vector<Coin> coins = {
        hadamard_coin(),
        // Generic coin with every entry nonzero, exactly unitary by the
        // (theta, phi1, phi2, delta) parametrization.
        [] {
            const double theta = 0.7, phi1 = 0.3, phi2 = -1.1, delta = 0.4;
            const complexd phase = std::polar(1.0, delta);
            return make_coin(phase * std::polar(std::cos(theta), phi1), phase * std::polar(std::sin(theta), phi2),
                             -phase * std::polar(std::sin(theta), -phi2), phase * std::polar(std::cos(theta), -phi1));
        }(),
    };
    const std::vector<QubitState> states = {
        make_state(1.0 / sqrt2, complexd(0.0, 1.0 / sqrt2)),
        make_state(0.8, complexd(0.0, 0.6)),
    };
    Check check;
    for (const Coin& coin : coins) {
        for (const QubitState& state : states) {
            for (int n = 0; n <= 10; ++n) {
                const AmplitudeField fast = evolve(coin, state, n);
                const AmplitudeField slow = path_sum_field(coin, state, n);
                for (int x = -n; x <= n; ++x) {
                    check.add(std::abs(fast.at(x).left - slow.at(x).left), 1e-12);
                    check.add(std::abs(fast.at(x).right - slow.at(x).right), 1e-12);
                }
            }
        }
    }
    return {check.ok, describe(check, 1e-12)};
}

std::pair<bool, std::string> mgf_identity() {
    std::mt19937_64 rng(0x5eed000b);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    const std::vector<MeasureSpec> specs = {Symmetric{r_hadamard}, Asymmetric{0.6, 0.5}};
    Check check;
    for (const MeasureSpec& spec : specs) {
        for (int i = 0; i < 20; ++i) {
            const complexd z = std::polar(0.4, angle(rng));
            complexd g;
            if (const auto* sym = std::get_if<Symmetric>(&spec))
                g = g_symmetric(1.0 / z, sym->r);
            else {
                const auto& a = std::get<Asymmetric>(spec);
                g = g_asym(1.0 / z, a.r, a.c);
            }
            check.add(std::abs(mgf(z, spec) - g / z), 1e-12);
        }
    }
    return {check.ok, describe(check, 1e-12)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> results;
    results.push_back(run_guarded(1, "moment-closed-vs-quadrature", moment_agreement));
    results.push_back(run_guarded(2, "hadamard-jacobi-recovery", hadamard_recovery));
    results.push_back(run_guarded(3, "transform-triple-agreement", transform_triple));
    results.push_back(run_guarded(4, "head-recursion-vs-closed-forms", head_recursion));
    results.push_back(run_guarded(5, "inversion-vs-closed-densities", inversion_consistency));
    results.push_back(run_guarded(6, "orthogonality-suite", orthogonality_suite));
    results.push_back(run_guarded(7, "generating-function", generating_function));
    results.push_back(run_guarded(8, "hadamard-polynomial-table", polynomial_table));
    results.push_back(run_guarded(9, "walk-weak-convergence", walk_convergence));
    results.push_back(run_guarded(10, "path-sum-dynamics", path_sum_dynamics));
    results.push_back(run_guarded(11, "mgf-stieltjes-identity", mgf_identity));
    return results;
}

bool report(std::ostream& os, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const CriterionResult& result : results) {
        os << (result.passed ? "PASS" : "FAIL") << "  " << result.id << "  " << result.name << "  "
           << result.detail << "\n";
        all = all && result.passed;
    }
    os << (all ? "all criteria passed" : "ACCEPTANCE FAILURE") << "\n";
    return all;
}

}  // namespace qws
