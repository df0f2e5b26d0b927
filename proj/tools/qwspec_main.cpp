// Command-line front end: every module surfaces as a subcommand with
// machine-readable CSV/JSON output. Exit codes: 0 success, 1 argument or
// domain validation error, 2 acceptance failure.

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qws/acceptance.hpp"
#include "qws/density.hpp"
#include "qws/format.hpp"
#include "qws/grid.hpp"
#include "qws/jacobi.hpp"
#include "qws/moments.hpp"
#include "qws/orthopoly.hpp"
#include "qws/stieltjes.hpp"
#include "qws/walk.hpp"

#include "output.hpp"
#include "parse.hpp"

namespace {

using namespace qws;
using cli::Table;

constexpr std::array<double, 5> default_eps = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};

struct CommonOpts {
    std::string format = "csv";
    std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", opts.output, "Output path, or - for stdout");
}

void emit(const Table& table, const CommonOpts& opts) {
    if (opts.output == "-") {
        cli::write_table(std::cout, table, opts.format);
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opts.output);
    cli::write_table(out, table, opts.format);
}

std::string fmt(double v) { return format_number(v); }

// Walk-measure flags (--r, --c) or general-case flags (--p head gammas,
// --tail-p, --q0, --q). Presence of --p selects the general family.
struct MeasureOpts {
    double r = 0.0;
    double c = 0.0;
    std::string head_gammas;
    double tail_gamma = 0.0;
    double q0 = 0.0;
    double q = 0.0;
    bool has_r = false;
    bool has_p = false;
};

void add_measure(CLI::App* cmd, MeasureOpts& opts) {
    auto* r = cmd->add_option("--r", opts.r, "Walk-measure parameter r in (0,1)");
    cmd->add_option("--c", opts.c, "Drift parameter c in [-1/r, 1/r] (default 0)");
    auto* p = cmd->add_option("--p", opts.head_gammas, "General case: comma-separated head gammas p0,p1,...");
    cmd->add_option("--tail-p", opts.tail_gamma, "General case: constant tail gamma");
    cmd->add_option("--q0", opts.q0, "General case: beta_0 offset (default 0)");
    cmd->add_option("--q", opts.q, "General case: beta_n offset for n >= 1 (default 0)");
    cmd->parse_complete_callback([r, p, &opts] {
        opts.has_r = r->count() > 0;
        opts.has_p = p->count() > 0;
    });
}

MeasureSpec build_spec(const MeasureOpts& opts) {
    MeasureSpec spec;
    if (opts.has_p) {
        if (!(opts.tail_gamma > 0.0)) throw std::invalid_argument("--p requires a positive --tail-p");
        spec = GeneralJacobi{cli::parse_double_list(opts.head_gammas), opts.tail_gamma, opts.q0, opts.q};
    } else if (opts.has_r) {
        spec = opts.c == 0.0 ? MeasureSpec{Symmetric{opts.r}} : MeasureSpec{Asymmetric{opts.r, opts.c}};
    } else {
        throw std::invalid_argument("specify a measure with --r [--c] or --p/--tail-p");
    }
    validate(spec);
    return spec;
}

Transform closed_transform(const MeasureSpec& spec) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) {
        const double r = sym->r;
        return [r](complexd z) { return g_symmetric(z, r); };
    }
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) {
        const double r = asym->r, c = asym->c;
        return [r, c](complexd z) { return g_asym(z, r, c); };
    }
    const auto gj = std::get<GeneralJacobi>(spec);
    if (gj.head_beta != 0.0 || gj.tail_beta != 0.0)
        return [gj](complexd z) { return g_general_asym(HalfPlanePoint(z), gj); };
    return [gj](complexd z) { return g_general(HalfPlanePoint(z), gj); };
}

double closed_density(const MeasureSpec& spec, double x) {
    if (std::holds_alternative<GeneralJacobi>(spec)) {
        const auto& gj = std::get<GeneralJacobi>(spec);
        return rho_closed(rho_family_of(gj), gj, x);
    }
    return density(spec, x);
}

std::pair<double, double> spec_support(const MeasureSpec& spec) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) return {-sym->r, sym->r};
    if (const auto* asym = std::get_if<Asymmetric>(&spec)) return {-asym->r, asym->r};
    return rho_support(std::get<GeneralJacobi>(spec));
}

// Closed Jacobi sequence when the family has one (c in {0, +-1, +-1/r}).
std::optional<JacobiSeq> closed_jacobi(double r, double c) {
    const double tol = 1e-12;
    if (std::abs(c) < tol) return jacobi_symmetric(r);
    if (std::abs(c - 1.0) < tol) return jacobi_c1(r);
    if (std::abs(c + 1.0) < tol) return reflected(jacobi_c1(r));
    if (std::abs(c - 1.0 / r) < tol) return jacobi_c_inv_r(r);
    if (std::abs(c + 1.0 / r) < tol) return reflected(jacobi_c_inv_r(r));
    return std::nullopt;
}

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// ----------------------------- subcommands -----------------------------

int cmd_simulate(const std::string& coin_text, const std::string& state_text, int steps,
                 const CommonOpts& out) {
    const Coin coin = cli::parse_coin(coin_text);
    const QubitState state = cli::parse_state(state_text);
    const Distribution dist = distribution(evolve(coin, state, steps));
    Table table;
    table.meta = {{"subcommand", "simulate"}, {"coin", coin_text}, {"state", state_text},
                  {"steps", std::to_string(steps)}};
    table.columns = {"x", "prob"};
    for (int x = -dist.time; x <= dist.time; ++x)
        table.rows.push_back({static_cast<double>(x), dist.at(x)});
    emit(table, out);
    return 0;
}

int cmd_density(const MeasureOpts& m, double lo, double hi, int count, const CommonOpts& out) {
    const MeasureSpec spec = build_spec(m);
    if (std::holds_alternative<GeneralJacobi>(spec))
        throw std::invalid_argument("density covers the walk measures; use the stieltjes subcommand for general ones");
    Table table;
    table.meta = {{"subcommand", "density"}, {"r", fmt(m.r)}, {"c", fmt(m.c)}};
    table.columns = {"x", "density", "cdf"};
    for (double x : linspace(lo, hi, count))
        table.rows.push_back({x, closed_density(spec, x), cdf_mu(x, spec)});
    emit(table, out);
    return 0;
}

int cmd_moments(const MeasureOpts& m, int max_m, const CommonOpts& out) {
    const MeasureSpec spec = build_spec(m);
    if (std::holds_alternative<GeneralJacobi>(spec))
        throw std::invalid_argument("closed moments exist for the walk measures only");
    Table table;
    table.meta = {{"subcommand", "moments"}, {"r", fmt(m.r)}, {"c", fmt(m.c)},
                  {"max_m", std::to_string(max_m)}};
    table.columns = {"m", "closed_form", "quadrature", "abs_diff"};
    for (int mm = 0; mm <= max_m; ++mm) {
        const double closed = moment_asym(mm, m.r, m.c);
        const double quad = moment_quadrature(mm, spec);
        table.rows.push_back({static_cast<double>(mm), closed, quad, std::abs(closed - quad)});
    }
    emit(table, out);
    return 0;
}

int cmd_jacobi(const MeasureOpts& m, int levels, const CommonOpts& out) {
    const MeasureSpec spec = build_spec(m);
    if (std::holds_alternative<GeneralJacobi>(spec))
        throw std::invalid_argument("the jacobi subcommand works on walk measures (--r, --c)");
    const std::optional<JacobiSeq> closed = closed_jacobi(m.r, m.c);
    std::optional<JacobiHead> head;
    if (!closed) {
        const JacobiHead h = jacobi_head_general(m.r, std::abs(m.c));
        head = m.c >= 0.0 ? h : JacobiHead{-h.beta0, h.gamma0, -h.beta1, h.gamma1};
    }
    const JacobiSeq recovered = jacobi_from_moments(moments_of(spec, 2 * levels + 2), levels);

    Table table;
    table.meta = {{"subcommand", "jacobi"}, {"r", fmt(m.r)}, {"c", fmt(m.c)},
                  {"levels", std::to_string(levels)}};
    table.columns = {"n", "beta_closed", "gamma_closed", "beta_recovered", "gamma_recovered", "abs_diff"};
    for (int n = 0; n < levels; ++n) {
        double beta_closed = nan_value, gamma_closed = nan_value;
        if (closed) {
            beta_closed = closed->beta(n);
            gamma_closed = closed->gamma(n);
        } else if (head && n <= 1) {
            beta_closed = n == 0 ? head->beta0 : head->beta1;
            gamma_closed = n == 0 ? head->gamma0 : head->gamma1;
        }
        const double br = recovered.beta(n), gr = recovered.gamma(n);
        const double diff = std::isnan(beta_closed)
                                ? nan_value
                                : std::max(std::abs(beta_closed - br), std::abs(gamma_closed - gr));
        table.rows.push_back({static_cast<double>(n), beta_closed, gamma_closed, br, gr, diff});
    }
    emit(table, out);
    return 0;
}

int cmd_poly(const MeasureOpts& m, int degree, const std::string& mode, double x, double z,
             const CommonOpts& out) {
    Table table;
    table.meta = {{"subcommand", "poly"}, {"r", fmt(m.r)}, {"c", fmt(m.c)}, {"emit", mode}};
    if (mode == "genfun") {
        if (m.c != 0.0) throw std::invalid_argument("the generating function is defined for c = 0");
        table.meta.emplace_back("x", fmt(x));
        table.meta.emplace_back("z", fmt(z));
        table.columns = {"N", "residual"};
        for (int n = 1; n <= degree; ++n)
            table.rows.push_back({static_cast<double>(n), genfun_residual(x, z, m.r, n)});
        emit(table, out);
        return 0;
    }
    const std::optional<JacobiSeq> seq = closed_jacobi(m.r, m.c);
    if (!seq)
        throw std::invalid_argument("poly needs a family with closed Jacobi coefficients: c in {0, +-1, +-1/r}");
    if (mode == "coeffs") {
        const std::vector<MonicPoly> polys = monic_coeffs(*seq, degree);
        table.columns = {"n"};
        for (int k = 0; k <= degree; ++k) table.columns.push_back("c" + std::to_string(k));
        for (int n = 0; n <= degree; ++n) {
            std::vector<double> row = {static_cast<double>(n)};
            for (int k = 0; k <= degree; ++k) {
                const auto& coeffs = polys[static_cast<std::size_t>(n)].coeffs;
                row.push_back(k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : 0.0);
            }
            table.rows.push_back(std::move(row));
        }
    } else {  // ortho
        const MeasureSpec spec = build_spec(m);
        table.columns = {"m"};
        for (int k = 0; k <= degree; ++k) table.columns.push_back("r" + std::to_string(k));
        for (int mm = 0; mm <= degree; ++mm) {
            std::vector<double> row = {static_cast<double>(mm)};
            for (int n = 0; n <= degree; ++n) row.push_back(orthogonality_residual(*seq, spec, mm, n));
            table.rows.push_back(std::move(row));
        }
    }
    emit(table, out);
    return 0;
}

int cmd_stieltjes(const MeasureOpts& m, int count, const std::string& eps_text, const CommonOpts& out) {
    const MeasureSpec spec = build_spec(m);
    const Transform transform = closed_transform(spec);
    const auto [lo, hi] = spec_support(spec);
    const double margin = 0.05 * (hi - lo);
    std::vector<double> eps(default_eps.begin(), default_eps.end());
    if (!eps_text.empty()) eps = cli::parse_double_list(eps_text);

    Table table;
    table.meta = {{"subcommand", "stieltjes"}, {"support_lo", fmt(lo)}, {"support_hi", fmt(hi)}};
    table.columns = {"x", "rho_closed", "rho_inverted", "abs_diff"};
    for (double x : linspace(lo + margin, hi - margin, count)) {
        const double closed = closed_density(spec, x);
        const double inverted = invert(transform, x, eps);
        table.rows.push_back({x, closed, inverted, std::abs(closed - inverted)});
    }
    emit(table, out);
    return 0;
}

int cmd_transform(const MeasureOpts& m, double im, double re_lo, double re_hi, int count,
                  const CommonOpts& out) {
    const MeasureSpec spec = build_spec(m);
    const Transform transform = closed_transform(spec);
    if (!(im > 0.0)) throw std::invalid_argument("--im must be positive (upper half plane)");
    Table table;
    table.meta = {{"subcommand", "transform"}, {"im", fmt(im)}};
    table.columns = {"re_z", "im_z", "re_g", "im_g"};
    for (double re : linspace(re_lo, re_hi, count)) {
        const complexd g = transform(complexd(re, im));
        table.rows.push_back({re, im, g.real(), g.imag()});
    }
    emit(table, out);
    return 0;
}

int cmd_verify() {
    const std::vector<CriterionResult> results = run_acceptance();
    const bool ok = report(std::cout, results);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum walk limit measures: simulation, densities, moments, Jacobi"
                 " sequences, orthogonal polynomials and Stieltjes transforms"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Exact walk distribution at time n");
    std::string coin_text = "hadamard";
    std::string state_text = "0.70710678118654752:0,0:0.70710678118654752";
    int steps = 100;
    CommonOpts sim_out;
    simulate->add_option("--coin", coin_text, "'hadamard' or a,b,c,d as re:im entries");
    simulate->add_option("--state", state_text, "alpha,beta as re:im entries (normalized on input)");
    simulate->add_option("--steps", steps, "Number of steps")->check(CLI::NonNegativeNumber);
    add_common(simulate, sim_out);

    // density
    auto* density_cmd = app.add_subcommand("density", "Limit density and CDF tables");
    MeasureOpts density_measure;
    double grid_lo = -0.999, grid_hi = 0.999;
    int grid_count = 201;
    CommonOpts density_out;
    add_measure(density_cmd, density_measure);
    density_cmd->add_option("--grid-min", grid_lo, "Grid start");
    density_cmd->add_option("--grid-max", grid_hi, "Grid end");
    density_cmd->add_option("--grid-count", grid_count, "Grid size")->check(CLI::Range(2, 1000000));
    add_common(density_cmd, density_out);

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "Closed moments against the quadrature oracle");
    MeasureOpts moments_measure;
    int max_m = 20;
    CommonOpts moments_out;
    add_measure(moments_cmd, moments_measure);
    moments_cmd->add_option("--max-m", max_m, "Largest moment order")->check(CLI::Range(0, 40));
    add_common(moments_cmd, moments_out);

    // jacobi
    auto* jacobi_cmd = app.add_subcommand("jacobi", "Closed vs moment-recovered Jacobi coefficients");
    MeasureOpts jacobi_measure;
    int levels = 6;
    CommonOpts jacobi_out;
    add_measure(jacobi_cmd, jacobi_measure);
    jacobi_cmd->add_option("--levels", levels, "Recovered levels")->check(CLI::Range(1, 8));
    add_common(jacobi_cmd, jacobi_out);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Monic polynomial tables and residuals");
    MeasureOpts poly_measure;
    int degree = 6;
    std::string poly_mode = "coeffs";
    double genfun_x = 0.4, genfun_z = 0.3;
    CommonOpts poly_out;
    add_measure(poly_cmd, poly_measure);
    poly_cmd->add_option("--degree", degree, "Largest degree / residual matrix size / largest N")
        ->check(CLI::Range(0, 64));
    poly_cmd->add_option("--emit", poly_mode, "coeffs, ortho or genfun")
        ->check(CLI::IsMember({"coeffs", "ortho", "genfun"}));
    poly_cmd->add_option("--x", genfun_x, "Evaluation point for --emit genfun");
    poly_cmd->add_option("--z", genfun_z, "Series variable for --emit genfun (|z| < 1/2)");
    add_common(poly_cmd, poly_out);

    // stieltjes
    auto* stieltjes_cmd = app.add_subcommand("stieltjes",
                                             "Closed density vs Stieltjes inversion of the transform");
    MeasureOpts stieltjes_measure;
    int stieltjes_count = 41;
    std::string eps_text;
    CommonOpts stieltjes_out;
    add_measure(stieltjes_cmd, stieltjes_measure);
    stieltjes_cmd->add_option("--grid-count", stieltjes_count, "Points on the interior grid")
        ->check(CLI::Range(2, 100000));
    stieltjes_cmd->add_option("--eps", eps_text, "Comma-separated decreasing epsilon schedule");
    add_common(stieltjes_cmd, stieltjes_out);

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "Transform values along a horizontal line");
    MeasureOpts transform_measure;
    double im = 1.0, re_lo = -3.0, re_hi = 3.0;
    int transform_count = 121;
    CommonOpts transform_out;
    add_measure(transform_cmd, transform_measure);
    transform_cmd->add_option("--im", im, "Imaginary part of z (> 0)");
    transform_cmd->add_option("--re-min", re_lo, "Smallest Re z");
    transform_cmd->add_option("--re-max", re_hi, "Largest Re z");
    transform_cmd->add_option("--count", transform_count, "Number of points")->check(CLI::Range(2, 1000000));
    add_common(transform_cmd, transform_out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance battery (exit 2 on failure)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(coin_text, state_text, steps, sim_out);
        if (density_cmd->parsed()) return cmd_density(density_measure, grid_lo, grid_hi, grid_count, density_out);
        if (moments_cmd->parsed()) return cmd_moments(moments_measure, max_m, moments_out);
        if (jacobi_cmd->parsed()) return cmd_jacobi(jacobi_measure, levels, jacobi_out);
        if (poly_cmd->parsed()) return cmd_poly(poly_measure, degree, poly_mode, genfun_x, genfun_z, poly_out);
        if (stieltjes_cmd->parsed())
            return cmd_stieltjes(stieltjes_measure, stieltjes_count, eps_text, stieltjes_out);
        if (transform_cmd->parsed())
            return cmd_transform(transform_measure, im, re_lo, re_hi, transform_count, transform_out);
        if (verify_cmd->parsed()) return cmd_verify();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
