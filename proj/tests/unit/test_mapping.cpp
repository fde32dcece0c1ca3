#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mapfit/errors.hpp"
#include "mapfit/geometry.hpp"
#include "mapfit/mapping.hpp"
#include "mapfit/metrics.hpp"

using namespace mapfit;

namespace {

constexpr double kPi = std::numbers::pi;

MeshPointSet identity_grid(int I, int J) {
    MeshPointSet p;
    p.xi.resize(I + 1);
    p.eta.resize(J + 1);
    p.x.resize(I + 1, J + 1);
    p.y.resize(I + 1, J + 1);
    for (int i = 0; i <= I; ++i)
        p.xi[i] = static_cast<double>(i) / I;
    for (int j = 0; j <= J; ++j)
        p.eta[j] = static_cast<double>(j) / J;
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) {
            p.x(i, j) = p.xi[i];
            p.y(i, j) = p.eta[j];
        }
    p.validate();
    return p;
}

double forward_xi_residual(const MeshPointSet& p, const ForwardMapping& f) {
    double worst = 0.0;
    for (int i = 0; i <= p.segments_i(); ++i)
        for (int j = 0; j <= p.segments_j(); ++j)
            worst = std::max(worst,
                             std::abs(f.xi_poly(p.x(i, j), p.y(i, j)) - p.xi[i]));
    return worst;
}

}  // namespace

TEST_SUITE_BEGIN("mapping");

TEST_CASE("validate rejects bad grids") {
    MeshPointSet p = identity_grid(2, 2);
    p.eta[1] = p.eta[2];
    CHECK_THROWS_AS(p.validate(), InvalidInput);

    MeshPointSet closed = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 2, 8, true);
    closed.x(0, 8) += 1e-3;  // break the seam
    CHECK_THROWS_AS(closed.validate(), SeamError);
}

TEST_CASE("seam_adjust") {
    MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 2, 16, true);
    const Eigen::VectorXd adj = seam_adjust(p);
    for (int j = 0; j <= 16; ++j)
        CHECK(std::abs(adj[j]) < 1e-12);

    MeshPointSet q = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 2, 4, true);
    const Eigen::VectorXd adj4 = seam_adjust(q);
    for (int j = 0; j <= 4; ++j)
        CHECK(std::abs(adj4[j]) < 1e-12);

    // non-uniform angular grid
    q.eta[1] = 0.9 * (kPi / 2.0);
    const Eigen::VectorXd nu = seam_adjust(q);
    CHECK(nu[0] == doctest::Approx(0.0));
    CHECK(nu[1] == doctest::Approx(-0.05 * kPi).epsilon(1e-12));
    CHECK(nu[2] == doctest::Approx(0.0).epsilon(1e-12));

    MeshPointSet open = polar_points(1.0, 2.0, 0.0, kPi, 2, 4, false);
    CHECK_THROWS_AS(seam_adjust(open), SeamError);
}

TEST_CASE("seam_restore") {
    CHECK(seam_restore(0.0, 0, 16) == 0.0);
    CHECK(seam_restore(0.0, 16, 16) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(seam_restore(0.0, -1, 16), InvalidInput);
    CHECK_THROWS_AS(seam_restore(0.0, 17, 16), InvalidInput);

    // restore after adjust is the identity on the grid targets
    MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 2, 12, true);
    const Eigen::VectorXd adj = seam_adjust(p);
    for (int j = 0; j <= 12; ++j)
        CHECK(seam_restore(adj[j], j, 12) == doctest::Approx(p.eta[j]).epsilon(1e-15));
}

TEST_CASE("affine data is fitted exactly") {
    const MeshPointSet p = identity_grid(2, 2);
    const auto fwd = fit_forward(p, 1, {});
    CHECK(fwd.mapping.xi_poly.coeff(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fwd.mapping.xi_poly.coeff(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fwd.mapping.xi_poly.coeff(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fwd.mapping.eta_poly.coeff(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fwd.xi_fit.residual_norm < 1e-9);

    const auto inv = fit_inverse(p, 1, {});
    CHECK(inv.mapping.x_poly.coeff(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inv.mapping.y_poly.coeff(1, 1) == doctest::Approx(1.0).epsilon(1e-12));

    const auto [x, y] = eval_inverse(inv.mapping, 0.3, 0.7);
    CHECK(x == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(y == doctest::Approx(0.7).epsilon(1e-10));

    const RoundTripReport rt = round_trip_report(p, fwd.mapping, inv.mapping);
    CHECK(rt.xi.max_abs < 1e-9);
    CHECK(rt.eta.max_abs < 1e-9);
    CHECK(rt.x.max_abs < 1e-9);
    CHECK(rt.y.max_abs < 1e-9);
}

TEST_CASE("fit recovers a polynomial mapping exactly") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const int degree = 3;
    Eigen::VectorXd cx(monomial_count(degree)), cy(monomial_count(degree));
    for (Eigen::Index k = 0; k < cx.size(); ++k) {
        cx[k] = U(rng);
        cy[k] = U(rng);
    }
    const Poly2D px(degree, cx), py(degree, cy);

    MeshPointSet p;
    const int I = 4, J = 5;
    p.xi.resize(I + 1);
    p.eta.resize(J + 1);
    p.x.resize(I + 1, J + 1);
    p.y.resize(I + 1, J + 1);
    for (int i = 0; i <= I; ++i)
        p.xi[i] = -1.0 + 2.0 * i / I + 0.05 * std::sin(2.3 * i);
    for (int j = 0; j <= J; ++j)
        p.eta[j] = -1.0 + 2.0 * j / J + 0.04 * std::cos(1.7 * j);
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) {
            p.x(i, j) = px(p.xi[i], p.eta[j]);
            p.y(i, j) = py(p.xi[i], p.eta[j]);
        }
    p.validate();

    const auto inv = fit_inverse(p, degree, {});
    CHECK((inv.mapping.x_poly.coeffs() - cx).lpNorm<Eigen::Infinity>() < 1e-8);
    CHECK((inv.mapping.y_poly.coeffs() - cy).lpNorm<Eigen::Infinity>() < 1e-8);
}

TEST_CASE("cartesian example fits within the recorded bounds") {
    const MeshPointSet raw = table1_fixture(false);
    const auto fwd = fit_forward(raw, 3, {});
    CHECK(forward_xi_residual(raw, fwd.mapping) <= 0.05);

    const MeshPointSet corr = table1_fixture(true);
    const auto fwd_c = fit_forward(corr, 3, {});
    CHECK(forward_xi_residual(corr, fwd_c.mapping) <= 0.05);

    const auto inv_c = fit_inverse(corr, 3, {});
    // published leading coefficients of the corrected fit
    CHECK(std::abs(inv_c.mapping.x_poly.coeff(0, 0) - 0.981) <= 0.05);
    CHECK(std::abs(inv_c.mapping.y_poly.coeff(0, 0) - 1.988714) <= 0.05);
}

TEST_CASE("closed polar fit with the adjusted-angle seam") {
    const MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true);
    const auto fwd = fit_forward(p, 7, {{}, SeamMode::paper_seam});
    REQUIRE(fwd.mapping.seam.has_value());
    CHECK(fwd.mapping.seam->mode == SeamMode::paper_seam);
    CHECK(forward_xi_residual(p, fwd.mapping) <= 0.01);
    // adjusted targets are identically zero on the uniform grid
    CHECK(fwd.eta_fit.residual_norm < 1e-9);
    for (int j = 0; j <= 20; ++j) {
        const ForwardValue v = eval_forward(fwd.mapping, p.x(2, j), p.y(2, j), j);
        CHECK(std::abs(v.eta - p.eta[j]) < 1e-9);
    }
}

TEST_CASE("closed polar fit with the dropped seam column") {
    const MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true);
    const auto fwd = fit_forward(p, 7, {{}, SeamMode::drop_duplicate});
    // branch resolution only ever adds whole periods
    for (auto [x, y] : {std::pair{0.0, 1.5}, {-1.5, 0.0}, {1.1, -0.9}, {1.5, 0.0}}) {
        const ForwardValue v = eval_forward(fwd.mapping, x, y);
        const double k = (v.eta - v.eta_raw) / (2.0 * kPi);
        CHECK(k == doctest::Approx(std::round(k)).epsilon(1e-12));
    }
    // away from the seam the angle comes back in [0, 2*pi); accuracy is the
    // frozen first-run baseline (0.096 at the top, 0.123 on the left)
    const ForwardValue top = eval_forward(fwd.mapping, 0.0, 1.5);
    CHECK(std::abs(top.eta - kPi / 2.0) < 0.2);
    const ForwardValue left = eval_forward(fwd.mapping, -1.5, 0.0);
    CHECK(std::abs(left.eta - kPi) < 0.2);
    // the positive-x branch resolves toward zero rather than 2*pi; the fit
    // itself is poor next to the cut
    const ForwardValue seam = eval_forward(fwd.mapping, 1.5, 0.0);
    CHECK(std::abs(seam.eta) < kPi);
}

TEST_CASE("round trip on the full circle stays within the recorded bound") {
    const MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true);
    const auto fwd = fit_forward(p, 7, {{}, SeamMode::paper_seam});
    const auto inv = fit_inverse(p, 7, {});
    const RoundTripReport rt = round_trip_report(p, fwd.mapping, inv.mapping);
    CHECK(rt.xi.max_abs <= 0.05);
    CHECK(rt.eta.max_abs <= 0.05);
    CHECK(rt.x.max_abs <= 0.05);
    CHECK(rt.y.max_abs <= 0.05);

    // round-trip error is controlled by the two fit residuals
    double fit_sum = 0.0;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 20; ++j) {
            const ForwardValue v = eval_forward(fwd.mapping, p.x(i, j), p.y(i, j), j);
            const auto [x, y] = eval_inverse(inv.mapping, p.xi[i], p.eta[j]);
            fit_sum = std::max(fit_sum, std::hypot(v.xi - p.xi[i], v.eta - p.eta[j]) +
                                            std::hypot(x - p.x(i, j), y - p.y(i, j)));
        }
    CHECK(std::max({rt.xi.max_abs, rt.eta.max_abs, rt.x.max_abs, rt.y.max_abs}) <=
          10.0 * fit_sum);
}

TEST_CASE("generalization grid") {
    const MeshPointSet p = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true);
    const auto inv = fit_inverse(p, 7, {});

    // refine = 1 reproduces the training grid images exactly
    const PolylineSet base = generalization_grid(inv.mapping, p.xi, p.eta, 1);
    REQUIRE(base.iso_xi.size() == 6);
    REQUIRE(base.iso_eta.size() == 21);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 20; ++j) {
            const auto [x, y] = eval_inverse(inv.mapping, p.xi[i], p.eta[j]);
            CHECK(base.iso_xi[i].points[j][0] == x);
            CHECK(base.iso_xi[i].points[j][1] == y);
        }

    // refined circles stay close to true circles of the same radius
    const PolylineSet fine = generalization_grid(inv.mapping, p.xi, p.eta, 2);
    REQUIRE(fine.iso_xi.size() == 11);
    double worst = 0.0;
    for (std::size_t a = 0; a < fine.iso_xi.size(); ++a) {
        const double radius = p.xi[0] + 0.1 * static_cast<double>(a);
        for (const auto& pt : fine.iso_xi[a].points)
            worst = std::max(worst, std::abs(std::hypot(pt[0], pt[1]) - radius));
    }
    CHECK(worst <= 0.05);

    CHECK_THROWS_AS(generalization_grid(inv.mapping, p.xi, p.eta, 0), InvalidInput);
}

TEST_CASE("high degree degrades the refined-grid behavior on the raw fixture") {
    const MeshPointSet pts = table1_fixture(false);
    const auto g3 = fit_inverse(pts, 3, {});
    const auto g5 = fit_inverse(pts, 5, {});
    const PolylineSet p3 = generalization_grid(g3.mapping, pts.xi, pts.eta, 2);
    const PolylineSet p5 = generalization_grid(g5.mapping, pts.xi, pts.eta, 2);

    double midline_dev = 0.0;
    for (std::size_t a = 0; a < p3.iso_xi.size(); ++a)
        for (std::size_t b = 0; b < p3.iso_xi[a].points.size(); ++b) {
            if (a % 2 == 0 && b % 2 == 0)
                continue;  // training lattice
            midline_dev = std::max(
                midline_dev, std::hypot(p5.iso_xi[a].points[b][0] - p3.iso_xi[a].points[b][0],
                                        p5.iso_xi[a].points[b][1] - p3.iso_xi[a].points[b][1]));
        }

    double fit3 = 0.0;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            const auto [x, y] = eval_inverse(g3.mapping, pts.xi[i], pts.eta[j]);
            fit3 = std::max(fit3, std::hypot(x - pts.x(i, j), y - pts.y(i, j)));
        }
    CHECK(midline_dev >= 5.0 * fit3);
    // the degree-5 basis is rank deficient on this 5 x 5 grid
    CHECK(g5.x_fit.dropped_columns.size() >= 1);
}

TEST_CASE("eccentric inverse fit reproduces the grid corners") {
    const MeshPointSet pts = eccentric_points({2.0, 6.0, 2.0, 4, 6});
    const auto inv = fit_inverse(pts, 6, {});
    const auto [x0, y0] = eval_inverse(inv.mapping, 2.0, 0.0);
    CHECK(std::abs(x0 - 2.0) <= 1e-3);
    CHECK(std::abs(y0 - 0.0) <= 1e-3);
    const auto [x1, y1] = eval_inverse(inv.mapping, 6.0, kPi / 2.0);
    CHECK(std::abs(x1 - 2.0) <= 2e-3);
    CHECK(std::abs(y1 - 6.0) <= 2e-3);
}

TEST_CASE("evaluation outside the fit region extrapolates to finite values") {
    const MeshPointSet pts = table1_fixture(true);
    const auto fwd = fit_forward(pts, 3, {});
    const ForwardValue far = eval_forward(fwd.mapping, 50.0, -40.0);
    CHECK(std::isfinite(far.xi));
    CHECK(std::isfinite(far.eta));
    const auto inv = fit_inverse(pts, 3, {});
    const auto [x, y] = eval_inverse(inv.mapping, 10.0, 10.0);
    CHECK(std::isfinite(x));
    CHECK(std::isfinite(y));
}

TEST_CASE("fitted inverse mappings preserve orientation on the example grids") {
    const auto check_positive = [](const MeshPointSet& pts, int degree) {
        const auto inv = fit_inverse(pts, degree, {});
        const InverseJetEvaluator jet(inv.mapping);
        for (int i = 0; i <= pts.segments_i(); ++i)
            for (int j = 0; j <= pts.segments_j(); ++j) {
                const MappingJet q = jet(pts.xi[i], pts.eta[j]);
                CHECK(q.x_xi * q.y_eta - q.x_eta * q.y_xi > 0.0);
            }
    };
    check_positive(table1_fixture(true), 3);
    check_positive(polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 5, 20, true), 7);
    check_positive(polar_points(1.0, 2.0, 0.0, 1.5 * kPi, 5, 15, false), 5);
    check_positive(eccentric_points({2.0, 6.0, 0.0, 4, 6}), 6);
    check_positive(eccentric_points({2.0, 6.0, 2.0, 4, 6}), 6);
}

TEST_CASE("solvability and seam errors") {
    const MeshPointSet p = identity_grid(2, 2);  // 9 points
    CHECK_THROWS_AS(fit_forward(p, 3, {}), SolvabilityError);
    CHECK_THROWS_AS(fit_inverse(p, 3, {}), SolvabilityError);

    MeshPointSet closed = polar_points(1.0, 2.0, 0.0, 2.0 * kPi, 3, 12, true);
    closed.y(1, 12) += 1e-3;
    CHECK_THROWS_AS(fit_forward(closed, 3, {}), SeamError);
}

TEST_SUITE_END();
