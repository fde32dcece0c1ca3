// mapfit command line: generate example grids, fit forward/inverse mappings,
// evaluate mappings and their derivatives, solve the transformed Laplace
// problem, and verify the bundled reproduction suites.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mapfit/errors.hpp"
#include "mapfit/geometry.hpp"
#include "mapfit/io.hpp"
#include "mapfit/mapping.hpp"
#include "mapfit/metrics.hpp"
#include "mapfit/pde.hpp"
#include "mapfit/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

double deg2rad(double deg) { return deg * kPi / 180.0; }

double env_or(const char* name, double fallback) {
    if (const char* s = std::getenv(name)) {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            throw mapfit::InvalidInput(std::string(name) + " is not a number: '" + s + "'");
        }
    }
    return fallback;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw mapfit::InvalidInput("cannot open output file '" + path + "'");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw mapfit::InvalidInput("cannot open input file '" + path + "'");
    return is;
}

mapfit::SeamMode parse_seam_mode(const std::string& s) {
    if (s == "paper-seam")
        return mapfit::SeamMode::paper_seam;
    if (s == "drop-duplicate")
        return mapfit::SeamMode::drop_duplicate;
    throw mapfit::InvalidInput("--seam-mode must be 'paper-seam' or 'drop-duplicate'");
}

void print_fit_report(const char* component, const mapfit::LsqSolution& fit) {
    std::cout << component << ": residual norm " << fit.residual_norm << ", rank " << fit.rank;
    if (!fit.dropped_columns.empty()) {
        std::cout << ", dropped columns:";
        for (const auto& idx : fit.dropped_columns)
            std::cout << " (" << idx.m << "," << idx.n << ")";
    }
    std::cout << "\n";
}

void warn_on_anomalies(const mapfit::LsqSolution& fit, const char* component) {
    if (!fit.dropped_columns.empty())
        std::cout << "warning: " << component << " fit is rank deficient ("
                  << fit.dropped_columns.size()
                  << " column(s) dropped); consider a smaller degree M\n";
}

// ---------------------------------------------------------------- gen-points

struct GenPointsArgs {
    std::string out = "points.csv";
    // polar
    double r0 = 1.0, r1 = 2.0, theta0_deg = 0.0, theta1_deg = 360.0;
    int I = 4, J = 16;
    bool closed = false;
    // eccentric
    double a = 2.0, R = 6.0, cI = 0.0;
    // table1
    bool corrected = false;
};

void run_gen_points(const std::string& kind, const GenPointsArgs& a) {
    mapfit::MeshPointSet pts;
    if (kind == "polar") {
        pts = mapfit::polar_points(a.r0, a.r1, deg2rad(a.theta0_deg), deg2rad(a.theta1_deg),
                                   a.I, a.J, a.closed);
    } else if (kind == "eccentric") {
        pts = mapfit::eccentric_points({a.a, a.R, a.cI, a.I, a.J});
    } else {
        pts = mapfit::table1_fixture(a.corrected);
    }
    auto os = open_out(a.out);
    mapfit::io::write_points_csv(os, pts);
    std::cout << pts.point_count() << " points written to " << a.out << "\n";
}

// ----------------------------------------------------------------------- fit

void run_fit(const std::string& points_path, const std::string& direction, int degree,
             const std::string& seam_mode, const mapfit::LsqOptions& lsq,
             const std::string& out) {
    auto is = open_in(points_path);
    const mapfit::MeshPointSet pts = mapfit::io::read_points_csv(is);

    mapfit::FitOptions opts;
    opts.lsq = lsq;
    opts.seam_mode = parse_seam_mode(seam_mode);

    auto os = open_out(out);
    if (direction == "forward") {
        const auto fit = mapfit::fit_forward(pts, degree, opts);
        mapfit::io::write_mapping_json(os, fit.mapping);
        print_fit_report("xi", fit.xi_fit);
        print_fit_report("eta", fit.eta_fit);
        warn_on_anomalies(fit.xi_fit, "xi");
        warn_on_anomalies(fit.eta_fit, "eta");
    } else if (direction == "inverse") {
        const auto fit = mapfit::fit_inverse(pts, degree, opts);
        mapfit::io::write_mapping_json(os, fit.mapping);
        print_fit_report("x", fit.x_fit);
        print_fit_report("y", fit.y_fit);
        warn_on_anomalies(fit.x_fit, "x");
        warn_on_anomalies(fit.y_fit, "y");
    } else {
        throw mapfit::InvalidInput("--direction must be 'forward' or 'inverse'");
    }
    std::cout << "mapping written to " << out << "\n";
}

// ---------------------------------------------------------------------- eval

struct EvalArgs {
    std::string mapping_path;
    std::string points_path;  // optional: evaluate at the grid of a points CSV
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
    int nu = 4, nv = 4;
    bool grid_given = false;
    bool angles_deg = false;  // v-range given in degrees
    std::vector<std::string> deriv;
    std::string out = "eval.csv";
};

std::vector<std::pair<int, int>> parse_orders(const std::vector<std::string>& names,
                                              bool inverse) {
    // component_suffix -> derivative orders in the mapping's own variables
    std::vector<std::pair<int, int>> orders;
    for (const std::string& d : names) {
        const std::string suffix = d.substr(d.find('_') + 1);
        int ou = 0, ov = 0;
        const std::string a = inverse ? "xi" : "x";
        const std::string b = inverse ? "eta" : "y";
        if (suffix == a) ou = 1;
        else if (suffix == b) ov = 1;
        else if (suffix == a + a) ou = 2;
        else if (suffix == a + b) ou = ov = 1;
        else if (suffix == b + b) ov = 2;
        else
            throw mapfit::InvalidInput("unknown derivative '" + d + "'");
        orders.emplace_back(ou, ov);
    }
    return orders;
}

void run_eval(const EvalArgs& a) {
    auto is = open_in(a.mapping_path);
    const mapfit::io::AnyMapping any = mapfit::io::read_mapping_json(is);
    const bool inverse = std::holds_alternative<mapfit::InverseMapping>(any);

    // Evaluation lattice.
    std::vector<double> us, vs;
    if (!a.points_path.empty()) {
        auto pis = open_in(a.points_path);
        const mapfit::MeshPointSet pts = mapfit::io::read_points_csv(pis);
        for (int i = 0; i <= pts.segments_i(); ++i)
            us.push_back(pts.xi[i]);
        for (int j = 0; j <= pts.segments_j(); ++j)
            vs.push_back(pts.eta[j]);
    } else if (a.grid_given) {
        for (int i = 0; i <= a.nu; ++i)
            us.push_back(a.u0 + (a.u1 - a.u0) * (static_cast<double>(i) / a.nu));
        for (int j = 0; j <= a.nv; ++j) {
            const double v = a.v0 + (a.v1 - a.v0) * (static_cast<double>(j) / a.nv);
            vs.push_back(a.angles_deg ? deg2rad(v) : v);
        }
    } else {
        throw mapfit::InvalidInput("eval needs either --points or an explicit grid");
    }

    auto os = open_out(a.out);
    const char* ucol = inverse ? "xi" : "x";
    const char* vcol = inverse ? "eta" : "y";
    if (inverse) {
        const auto& g = std::get<mapfit::InverseMapping>(any);
        const auto orders = parse_orders(a.deriv, true);
        os << ucol << ',' << vcol << ",x,y";
        for (const auto& d : a.deriv)
            os << ',' << d;
        os << '\n';
        // Derivative polynomials, one pair (x,y) per requested order.
        std::vector<std::pair<mapfit::Poly2D, mapfit::Poly2D>> dpolys;
        for (std::size_t k = 0; k < a.deriv.size(); ++k)
            dpolys.emplace_back(g.x_poly.derivative(orders[k].first, orders[k].second),
                                g.y_poly.derivative(orders[k].first, orders[k].second));
        for (double u : us) {
            for (double v : vs) {
                const auto [x, y] = mapfit::eval_inverse(g, u, v);
                os << mapfit::io::format_double(u) << ',' << mapfit::io::format_double(v)
                   << ',' << mapfit::io::format_double(x) << ','
                   << mapfit::io::format_double(y);
                for (std::size_t k = 0; k < a.deriv.size(); ++k) {
                    const bool xcomp = a.deriv[k][0] == 'x';
                    const double val =
                        xcomp ? dpolys[k].first(u, v) : dpolys[k].second(u, v);
                    os << ',' << mapfit::io::format_double(val);
                }
                os << '\n';
            }
        }
    } else {
        const auto& f = std::get<mapfit::ForwardMapping>(any);
        const auto orders = parse_orders(a.deriv, false);
        os << ucol << ',' << vcol << ",xi,eta_raw,eta";
        for (const auto& d : a.deriv)
            os << ',' << d;
        os << '\n';
        std::vector<std::pair<mapfit::Poly2D, mapfit::Poly2D>> dpolys;
        for (std::size_t k = 0; k < a.deriv.size(); ++k)
            dpolys.emplace_back(f.xi_poly.derivative(orders[k].first, orders[k].second),
                                f.eta_poly.derivative(orders[k].first, orders[k].second));
        for (double u : us) {
            for (double v : vs) {
                const auto fv = mapfit::eval_forward(f, u, v);
                os << mapfit::io::format_double(u) << ',' << mapfit::io::format_double(v)
                   << ',' << mapfit::io::format_double(fv.xi) << ','
                   << mapfit::io::format_double(fv.eta_raw) << ','
                   << mapfit::io::format_double(fv.eta);
                for (std::size_t k = 0; k < a.deriv.size(); ++k) {
                    const bool xicomp = a.deriv[k].rfind("xi", 0) == 0;
                    const double val =
                        xicomp ? dpolys[k].first(u, v) : dpolys[k].second(u, v);
                    os << ',' << mapfit::io::format_double(val);
                }
                os << '\n';
            }
        }
    }
    std::cout << us.size() * vs.size() << " evaluations written to " << a.out << "\n";
}

// ------------------------------------------------------------------ gen-grid

void run_gen_grid(const std::string& mapping_path, const std::string& points_path, int refine,
                  const std::string& out, const std::string& svg) {
    auto is = open_in(mapping_path);
    const auto any = mapfit::io::read_mapping_json(is);
    if (!std::holds_alternative<mapfit::InverseMapping>(any))
        throw mapfit::InvalidInput("gen-grid needs an inverse mapping");
    auto pis = open_in(points_path);
    const mapfit::MeshPointSet pts = mapfit::io::read_points_csv(pis);

    const auto set = mapfit::generalization_grid(std::get<mapfit::InverseMapping>(any),
                                                 pts.xi, pts.eta, refine);
    auto os = open_out(out);
    mapfit::io::write_polylines_csv(os, set);
    std::cout << set.iso_xi.size() + set.iso_eta.size() << " polylines written to " << out
              << "\n";
    if (!svg.empty()) {
        auto svgos = open_out(svg);
        mapfit::io::write_polylines_svg(svgos, set);
        std::cout << "svg written to " << svg << "\n";
    }
}

// --------------------------------------------------------------------- solve

struct SolveArgs {
    double a = 2.0, R = 6.0, cI = 0.0;
    int I = 4, J = 6, M = 6;
    double phiA = 0.0, phiR = 1.0;
    std::string metric = "inverse-fit";
    std::string out = "solution.csv";
    std::string table;  // optional comparison table path (concentric only)
};

void run_solve(const SolveArgs& a, const mapfit::LsqOptions& lsq, double jac_tol) {
    mapfit::DirichletProblem prob;
    prob.spec = {a.a, a.R, a.cI, a.I, a.J};
    prob.degree = a.M;
    prob.phi_a = a.phiA;
    prob.phi_R = a.phiR;
    prob.lsq = lsq;
    prob.metric.jac_tol = jac_tol;
    if (a.metric == "inverse-fit")
        prob.metric_source = mapfit::MetricSource::inverse_fit;
    else if (a.metric == "forward-fit")
        prob.metric_source = mapfit::MetricSource::forward_fit;
    else if (a.metric == "analytic-oracle")
        prob.metric_source = mapfit::MetricSource::analytic_oracle;
    else
        throw mapfit::InvalidInput(
            "--metric must be 'inverse-fit', 'forward-fit' or 'analytic-oracle'");

    const auto system = mapfit::assemble(prob);
    const auto sol = mapfit::solve(system);
    if (!sol.max_principle_ok)
        std::cout << "warning: solution leaves the boundary-value range "
                  << "(discrete maximum principle violated)\n";

    auto os = open_out(a.out);
    mapfit::io::write_solution_csv(os, sol, system.xi, system.eta);
    std::cout << "solution written to " << a.out << " (residual norm " << sol.residual_norm
              << ")\n";

    if (a.cI == 0.0) {
        const auto cmp = mapfit::compare_with_exact(sol, prob);
        std::cout << "max |numeric - exact| = " << cmp.max_abs_error << "\n";
        if (!a.table.empty()) {
            auto tos = open_out(a.table);
            mapfit::io::write_comparison_csv(tos, cmp);
            std::cout << "comparison table written to " << a.table << "\n";
        }
    } else if (!a.table.empty()) {
        throw mapfit::InvalidInput(
            "--table needs the concentric case (c_I = 0); no exact profile otherwise");
    }
}

// -------------------------------------------------------------------- verify

int run_verify(const std::string& suite, const mapfit::LsqOptions& lsq) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = mapfit::verify::suite_names();
    else
        suites.push_back(suite);

    bool all_ok = true;
    for (const std::string& name : suites) {
        const auto rep = mapfit::verify::run_suite(name, lsq);
        std::cout << "suite " << rep.suite << ":\n";
        for (const auto& c : rep.checks) {
            const bool pass = c.pass();
            std::cout << "  [" << (pass ? "pass" : (c.hard ? "FAIL" : "soft-fail")) << "] "
                      << c.name << ": " << c.value << " (tol " << c.tolerance << ")\n";
            if (c.hard && !pass)
                all_ok = false;
        }
        std::cout << "  => " << (rep.ok() ? "OK" : "FAILED") << "\n";
    }
    return all_ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvilinear coordinate mappings by polynomial least squares"};
    app.require_subcommand(1);

    mapfit::LsqOptions lsq;
    double jac_tol = 1e-8;

    try {
        lsq.rel_tol = env_or("MAPFIT_REL_TOL", lsq.rel_tol);
        jac_tol = env_or("MAPFIT_JAC_TOL", jac_tol);
    } catch (const mapfit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    // gen-points
    auto* gen = app.add_subcommand("gen-points", "generate a point-correspondence CSV");
    gen->require_subcommand(1);
    GenPointsArgs ga;
    auto* gp = gen->add_subcommand("polar", "circle or sector grid");
    gp->add_option("--r0", ga.r0, "inner radius");
    gp->add_option("--r1", ga.r1, "outer radius");
    gp->add_option("--theta0", ga.theta0_deg, "start angle [deg]");
    gp->add_option("--theta1", ga.theta1_deg, "end angle [deg]");
    gp->add_option("--I", ga.I, "radial segments");
    gp->add_option("--J", ga.J, "angular segments");
    gp->add_flag("--closed", ga.closed, "full-circle topology (span must be 360 deg)");
    gp->add_option("-o,--out", ga.out, "output CSV");
    auto* ge = gen->add_subcommand("eccentric", "annulus grid, upper half");
    ge->add_option("--a", ga.a, "inner radius");
    ge->add_option("--R", ga.R, "outer radius");
    ge->add_option("--cI", ga.cI, "outer center offset along x");
    ge->add_option("--I", ga.I, "radial segments");
    ge->add_option("--J", ga.J, "angular segments");
    ge->add_option("-o,--out", ga.out, "output CSV");
    auto* gt = gen->add_subcommand("table1", "bundled cartesian example grid");
    gt->add_flag("--corrected", ga.corrected, "replace the misprinted 0.27 entries by 0.75");
    gt->add_option("-o,--out", ga.out, "output CSV");

    // fit
    auto* fit = app.add_subcommand("fit", "fit a mapping to a points CSV");
    std::string fit_points, fit_direction = "inverse", fit_seam = "drop-duplicate",
                fit_out = "mapping.json";
    int fit_degree = 3;
    bool fit_normalize = false;
    fit->add_option("--points", fit_points, "points CSV")->required();
    fit->add_option("--direction", fit_direction, "forward | inverse");
    fit->add_option("--M", fit_degree, "polynomial total degree")->required();
    fit->add_option("--seam-mode", fit_seam, "paper-seam | drop-duplicate");
    fit->add_option("--rel-tol", lsq.rel_tol, "pivot truncation threshold");
    fit->add_flag("--normalize", fit_normalize, "equilibrate design-matrix columns");
    fit->add_option("-o,--out", fit_out, "output mapping JSON");

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a mapping on a grid or points CSV");
    EvalArgs ea;
    ev->add_option("--mapping", ea.mapping_path, "mapping JSON")->required();
    ev->add_option("--points", ea.points_path, "points CSV supplying the evaluation grid");
    auto* u0 = ev->add_option("--u0", ea.u0, "grid start, first coordinate");
    ev->add_option("--u1", ea.u1, "grid end, first coordinate");
    ev->add_option("--v0", ea.v0, "grid start, second coordinate");
    ev->add_option("--v1", ea.v1, "grid end, second coordinate");
    ev->add_option("--nu", ea.nu, "grid segments, first coordinate");
    ev->add_option("--nv", ea.nv, "grid segments, second coordinate");
    ev->add_flag("--degrees", ea.angles_deg, "second grid coordinate given in degrees");
    ev->add_option("--deriv", ea.deriv,
                   "derivative columns, e.g. x_xi,y_eta,x_xieta (inverse) or xi_x (forward)")
        ->delimiter(',');
    ev->add_option("-o,--out", ea.out, "output CSV");

    // gen-grid
    auto* gg = app.add_subcommand("gen-grid",
                                  "physical-plane images of refined mapped-plane grid lines");
    std::string gg_mapping, gg_points, gg_out = "grid.csv", gg_svg;
    int gg_refine = 2;
    gg->add_option("--mapping", gg_mapping, "inverse mapping JSON")->required();
    gg->add_option("--points", gg_points, "training points CSV (grid lines)")->required();
    gg->add_option("--refine", gg_refine, "lines inserted per training interval");
    gg->add_option("-o,--out", gg_out, "output polyline CSV");
    gg->add_option("--svg", gg_svg, "optional SVG rendering");

    // solve
    auto* so = app.add_subcommand("solve", "solve the annulus potential problem");
    SolveArgs sa;
    so->add_option("--a", sa.a, "inner radius");
    so->add_option("--R", sa.R, "outer radius");
    so->add_option("--cI", sa.cI, "outer center offset along x");
    so->add_option("--I", sa.I, "radial segments");
    so->add_option("--J", sa.J, "angular segments");
    so->add_option("--M", sa.M, "mapping fit degree");
    so->add_option("--phiA", sa.phiA, "potential on the inner circle");
    so->add_option("--phiR", sa.phiR, "potential on the outer circle");
    so->add_option("--metric", sa.metric, "inverse-fit | forward-fit | analytic-oracle");
    so->add_option("--rel-tol", lsq.rel_tol, "pivot truncation threshold for the fit");
    so->add_option("--jac-tol", jac_tol, "singular-Jacobian threshold");
    so->add_option("-o,--out", sa.out, "solution CSV");
    so->add_option("--table", sa.table, "comparison table CSV (concentric only)");

    // verify
    auto* vf = app.add_subcommand("verify", "run a reproduction suite");
    std::string vf_suite;
    vf->add_option("suite", vf_suite, "table1 | full-circle | sector | concentric | eccentric | all")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            lsq.normalize = false;
            if (gp->parsed()) run_gen_points("polar", ga);
            else if (ge->parsed()) run_gen_points("eccentric", ga);
            else run_gen_points("table1", ga);
        } else if (fit->parsed()) {
            lsq.normalize = fit_normalize;
            run_fit(fit_points, fit_direction, fit_degree, fit_seam, lsq, fit_out);
        } else if (ev->parsed()) {
            ea.grid_given = u0->count() > 0 || ea.points_path.empty();
            run_eval(ea);
        } else if (gg->parsed()) {
            run_gen_grid(gg_mapping, gg_points, gg_refine, gg_out, gg_svg);
        } else if (so->parsed()) {
            run_solve(sa, lsq, jac_tol);
        } else if (vf->parsed()) {
            return run_verify(vf_suite, lsq);
        }
    } catch (const mapfit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const mapfit::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
