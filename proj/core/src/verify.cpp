#include "mapfit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mapfit/errors.hpp"
#include "mapfit/geometry.hpp"
#include "mapfit/metrics.hpp"
#include "mapfit/pde.hpp"
#include "mapfit/refdata.hpp"

namespace mapfit::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Regression baselines frozen from the first recorded run of each suite.
// Measured on the recording run: corrected cartesian round trip 0.065, raw
// 1.99; sector fits 0.0078 (xi) / 0.485 (eta) / 0.019 (x, y), round trip
// 0.462; circle drop-duplicate eta residual 1.96 (the angle is two-valued at
// the seam, a single polynomial cannot follow the jump).
constexpr double kCartesianRoundTripTol = 0.1;
constexpr double kCartesianRawRoundTripTol = 2.5;
constexpr double kSectorXiFitTol = 0.02;
constexpr double kSectorEtaFitTol = 0.6;
constexpr double kSectorInverseFitTol = 0.03;
constexpr double kSectorRoundTripTol = 0.6;
constexpr double kCircleDropDupEtaTol = 2.5;

struct FitResiduals {
    double xi = 0.0, eta = 0.0;
};

FitResiduals forward_residuals(const MeshPointSet& p, const ForwardMapping& f) {
    FitResiduals r;
    for (int i = 0; i <= p.segments_i(); ++i) {
        for (int j = 0; j <= p.segments_j(); ++j) {
            const ForwardValue v = eval_forward(f, p.x(i, j), p.y(i, j), f.seam ? j : 0);
            r.xi = std::max(r.xi, std::abs(v.xi - p.xi[i]));
            r.eta = std::max(r.eta, std::abs(v.eta - p.eta[j]));
        }
    }
    return r;
}

struct InverseResiduals {
    double x = 0.0, y = 0.0;
};

InverseResiduals inverse_residuals(const MeshPointSet& p, const InverseMapping& g) {
    InverseResiduals r;
    for (int i = 0; i <= p.segments_i(); ++i) {
        for (int j = 0; j <= p.segments_j(); ++j) {
            const auto [x, y] = eval_inverse(g, p.xi[i], p.eta[j]);
            r.x = std::max(r.x, std::abs(x - p.x(i, j)));
            r.y = std::max(r.y, std::abs(y - p.y(i, j)));
        }
    }
    return r;
}

double round_trip_max(const RoundTripReport& rt) {
    return std::max({rt.xi.max_abs, rt.eta.max_abs, rt.x.max_abs, rt.y.max_abs});
}

double jet_component(const MappingJet& jet, const std::string& name) {
    if (name == "x") return jet.x;
    if (name == "x_xi") return jet.x_xi;
    if (name == "x_eta") return jet.x_eta;
    if (name == "x_xixi") return jet.x_xixi;
    if (name == "x_xieta") return jet.x_xieta;
    if (name == "x_etaeta") return jet.x_etaeta;
    if (name == "y") return jet.y;
    if (name == "y_xi") return jet.y_xi;
    if (name == "y_eta") return jet.y_eta;
    if (name == "y_xixi") return jet.y_xixi;
    if (name == "y_xieta") return jet.y_xieta;
    if (name == "y_etaeta") return jet.y_etaeta;
    throw InvalidInput("unknown jet component '" + name + "'");
}

SuiteReport suite_table1(const LsqOptions& lsq) {
    SuiteReport rep{"table1", {}};
    const FitOptions opts{lsq, SeamMode::drop_duplicate};

    for (bool corrected : {false, true}) {
        const std::string tag = corrected ? "corrected" : "raw";
        const MeshPointSet pts = table1_fixture(corrected);

        // The misprinted 0.27 line pollutes every eta-dependent quantity of
        // the raw variant; those checks are informational there.
        const auto fwd = fit_forward(pts, 3, opts);
        const FitResiduals fr = forward_residuals(pts, fwd.mapping);
        rep.checks.push_back({"forward fit max |xi| residual (" + tag + ")", fr.xi, 0.05, true});
        rep.checks.push_back({"forward fit max |eta| residual (" + tag + ")", fr.eta,
                              corrected ? 0.05 : 0.25, corrected});

        const auto inv = fit_inverse(pts, 3, opts);
        const InverseResiduals ir = inverse_residuals(pts, inv.mapping);
        rep.checks.push_back({"inverse fit max |x| residual (" + tag + ")", ir.x,
                              corrected ? 0.15 : 2.0, corrected});
        rep.checks.push_back({"inverse fit max |y| residual (" + tag + ")", ir.y,
                              corrected ? 0.15 : 2.0, corrected});

        const auto rt = round_trip_report(pts, fwd.mapping, inv.mapping);
        rep.checks.push_back({"round trip max error (" + tag + ")", round_trip_max(rt),
                              corrected ? kCartesianRoundTripTol : kCartesianRawRoundTripTol,
                              corrected});

        // Leading inverse coefficients against the published fit; best-effort
        // on the raw variant because of the misprint.
        const auto& ri = refdata::cartesian_inverse_coeffs();
        rep.checks.push_back({"inverse coeff x(0,0) vs published (" + tag + ")",
                              std::abs(inv.mapping.x_poly.coeff(0, 0) - ri.first[0]), 0.05,
                              corrected});
        rep.checks.push_back({"inverse coeff y(0,0) vs published (" + tag + ")",
                              std::abs(inv.mapping.y_poly.coeff(0, 0) - ri.second[0]), 0.05,
                              corrected});

        if (corrected) {
            // The corrected fixture reproduces every published coefficient of
            // both fits to print precision (measured 5.5e-6).
            const auto& rf = refdata::cartesian_forward_coeffs();
            double dev = 0.0;
            for (std::size_t k = 0; k < ri.index.size(); ++k) {
                const auto [m, n] = ri.index[k];
                dev = std::max({dev, std::abs(inv.mapping.x_poly.coeff(m, n) - ri.first[k]),
                                std::abs(inv.mapping.y_poly.coeff(m, n) - ri.second[k]),
                                std::abs(fwd.mapping.xi_poly.coeff(m, n) - rf.first[k]),
                                std::abs(fwd.mapping.eta_poly.coeff(m, n) - rf.second[k])});
            }
            rep.checks.push_back({"all published coefficients reproduced (corrected)", dev,
                                  1e-4, true});
        }
    }
    return rep;
}

SuiteReport suite_full_circle(const LsqOptions& lsq) {
    SuiteReport rep{"full-circle", {}};
    const MeshPointSet pts = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true);

    // Adjusted-angle seam handling: the angular targets collapse to zero on
    // the uniform grid, so the angle is exact at nodes by construction.
    const auto fwd = fit_forward(pts, 7, {lsq, SeamMode::paper_seam});
    const FitResiduals fr = forward_residuals(pts, fwd.mapping);
    rep.checks.push_back({"forward fit max |xi| residual (adjusted seam)", fr.xi, 0.02, true});
    rep.checks.push_back({"forward fit max |eta| residual (adjusted seam)", fr.eta, 0.02, true});

    const auto inv = fit_inverse(pts, 7, {lsq});
    const InverseResiduals ir = inverse_residuals(pts, inv.mapping);
    rep.checks.push_back({"inverse fit max |x| residual", ir.x, 0.02, true});
    rep.checks.push_back({"inverse fit max |y| residual", ir.y, 0.02, true});

    const auto rt = round_trip_report(pts, fwd.mapping, inv.mapping);
    rep.checks.push_back({"round trip max error", round_trip_max(rt), 0.05, true});

    // Single-valued angle fit over columns 0..J-1; usable off the grid but
    // much less accurate near the seam.
    const auto fwd_dd = fit_forward(pts, 7, {lsq, SeamMode::drop_duplicate});
    const FitResiduals frd = forward_residuals(pts, fwd_dd.mapping);
    rep.checks.push_back({"forward fit max |xi| residual (dropped seam column)", frd.xi,
                          0.02, true});
    rep.checks.push_back({"forward fit max |eta| residual (dropped seam column)", frd.eta,
                          kCircleDropDupEtaTol, false});

    // Coarser variant: radial coordinate at the outer seam node.
    const MeshPointSet coarse = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 4, 16, true);
    const auto fwd_c = fit_forward(coarse, 7, {lsq, SeamMode::paper_seam});
    const ForwardValue at_seam = eval_forward(fwd_c.mapping, 2.0, 0.0, 0);
    rep.checks.push_back({"coarse grid xi(2,0) vs 2", std::abs(at_seam.xi - 2.0), 0.02, true});
    return rep;
}

SuiteReport suite_sector(const LsqOptions& lsq) {
    SuiteReport rep{"sector", {}};
    const MeshPointSet pts = polar_points(1.0, 2.0, 0.0, 1.5 * kPi, 5, 15, false);

    const auto fwd = fit_forward(pts, 5, {lsq});
    const FitResiduals fr = forward_residuals(pts, fwd.mapping);
    rep.checks.push_back({"forward fit max |xi| residual", fr.xi, kSectorXiFitTol, true});
    rep.checks.push_back({"forward fit max |eta| residual", fr.eta, kSectorEtaFitTol, true});

    const auto inv = fit_inverse(pts, 5, {lsq});
    const InverseResiduals ir = inverse_residuals(pts, inv.mapping);
    rep.checks.push_back({"inverse fit max |x| residual", ir.x, kSectorInverseFitTol, true});
    rep.checks.push_back({"inverse fit max |y| residual", ir.y, kSectorInverseFitTol, true});

    const auto rt = round_trip_report(pts, fwd.mapping, inv.mapping);
    rep.checks.push_back({"round trip max error", round_trip_max(rt), kSectorRoundTripTol, true});
    return rep;
}

SuiteReport suite_concentric(const LsqOptions& lsq) {
    SuiteReport rep{"concentric", {}};
    DirichletProblem prob;
    prob.spec = {2.0, 6.0, 0.0, 4, 6};
    prob.degree = 6;
    prob.phi_a = 0.0;
    prob.phi_R = 1.0;
    prob.metric_source = MetricSource::inverse_fit;
    prob.lsq = lsq;

    const SolutionField sol = solve(assemble(prob));
    const ComparisonTable cmp = compare_with_exact(sol, prob);
    rep.checks.push_back({"potential max |numeric - exact|", cmp.max_abs_error, 0.01, true});
    rep.checks.push_back({"discrete maximum principle", sol.max_principle_ok ? 0.0 : 1.0, 0.0,
                          true});

    // Distance to the published run of the same configuration (measured
    // 0.0137; the producing solver differs in its rank truncation).
    const auto& ref = refdata::concentric_potential();
    double dev = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 7; ++j)
            dev = std::max(dev, std::abs(sol.phi(i, j) - ref.numeric(i, j)));
    rep.checks.push_back({"potential max deviation from published run", dev, 0.02, false});

    // Published inverse-fit coefficients; the producing truncation rule is
    // unknown, so this is informational.
    const MeshPointSet grid = eccentric_points(prob.spec);
    const auto inv = fit_inverse(grid, 6, {lsq});
    const auto& coeffs = refdata::concentric_inverse_coeffs();
    double cdev = 0.0;
    for (std::size_t k = 0; k < coeffs.index.size(); ++k) {
        cdev = std::max(cdev, std::abs(inv.mapping.x_poly.coeff(coeffs.index[k].m,
                                                                coeffs.index[k].n) -
                                       coeffs.first[k]));
        cdev = std::max(cdev, std::abs(inv.mapping.y_poly.coeff(coeffs.index[k].m,
                                                                coeffs.index[k].n) -
                                       coeffs.second[k]));
    }
    // The published fit zeroes high-degree columns while pivoting here drops
    // low-degree ones; fitted values agree, raw coefficients cannot.
    rep.checks.push_back({"inverse coeffs max deviation from published", cdev, 10.0, false});
    rep.checks.push_back({"rank-truncated columns (3 dependent on this tensor grid)",
                          std::abs(static_cast<double>(inv.x_fit.dropped_columns.size()) - 3.0),
                          0.0, false});
    return rep;
}

SuiteReport suite_eccentric(const LsqOptions& lsq) {
    SuiteReport rep{"eccentric", {}};
    const AnnulusSpec spec{2.0, 6.0, 2.0, 4, 6};

    // Closed-form mapping against every published exact entry.
    double oracle_dev = 0.0;
    for (const auto& table : refdata::eccentric_accuracy()) {
        for (std::size_t r = 0; r < table.eta_deg.size(); ++r) {
            for (std::size_t c = 0; c < table.xi.size(); ++c) {
                const MappingJet jet =
                    eccentric_oracle(spec, table.xi[c], table.eta_deg[r] * kPi / 180.0);
                oracle_dev = std::max(oracle_dev,
                                      std::abs(jet_component(jet, table.component) -
                                               table.exact(static_cast<Eigen::Index>(r),
                                                           static_cast<Eigen::Index>(c))));
            }
        }
    }
    rep.checks.push_back({"closed-form mapping vs published exact entries", oracle_dev, 1e-5,
                          true});

    // Fitted inverse mapping against the published fitted values.
    const MeshPointSet grid = eccentric_points(spec);
    const auto inv = fit_inverse(grid, 6, {lsq});
    const InverseJetEvaluator jet(inv.mapping);
    for (const auto& table : refdata::eccentric_accuracy()) {
        double dev = 0.0;
        for (std::size_t r = 0; r < table.eta_deg.size(); ++r)
            for (std::size_t c = 0; c < table.xi.size(); ++c)
                dev = std::max(dev, std::abs(jet_component(jet(table.xi[c],
                                                               table.eta_deg[r] * kPi / 180.0),
                                                           table.component) -
                                             table.num(static_cast<Eigen::Index>(r),
                                                       static_cast<Eigen::Index>(c))));
        const bool value_table = table.component == "x" || table.component == "y";
        // Fitted values at nodes are pinned by the least-squares projection;
        // fitted derivatives depend on the truncation rule and are soft.
        rep.checks.push_back({"fitted " + table.component + " vs published fit",
                              dev, value_table ? 1e-3 : 0.1, value_table});
    }

    // Potential solve in the eccentric region: boundedness and radial
    // monotonicity of the solution.
    DirichletProblem prob;
    prob.spec = spec;
    prob.degree = 6;
    prob.phi_a = 0.0;
    prob.phi_R = 1.0;
    prob.lsq = lsq;
    const SolutionField sol = solve(assemble(prob));
    rep.checks.push_back({"discrete maximum principle", sol.max_principle_ok ? 0.0 : 1.0, 0.0,
                          true});
    double monotone = 0.0;
    for (int j = 0; j <= spec.J; ++j)
        for (int i = 0; i + 1 <= spec.I; ++i)
            if (sol.phi(i + 1, j) < sol.phi(i, j) - 1e-12)
                monotone = 1.0;
    rep.checks.push_back({"potential monotone along xi lines", monotone, 0.0, true});
    return rep;
}

}  // namespace

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return !c.hard || c.pass(); });
}

std::vector<std::string> suite_names() {
    return {"table1", "full-circle", "sector", "concentric", "eccentric"};
}

SuiteReport run_suite(const std::string& name, const LsqOptions& lsq) {
    if (name == "table1") return suite_table1(lsq);
    if (name == "full-circle") return suite_full_circle(lsq);
    if (name == "sector") return suite_sector(lsq);
    if (name == "concentric") return suite_concentric(lsq);
    if (name == "eccentric") return suite_eccentric(lsq);
    throw InvalidInput("unknown verify suite '" + name + "'; available: table1, full-circle, "
                       "sector, concentric, eccentric");
}

}  // namespace mapfit::verify
