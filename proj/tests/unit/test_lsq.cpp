#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/oracles.hpp"
#include "mapfit/errors.hpp"
#include "mapfit/geometry.hpp"
#include "mapfit/lsq.hpp"
#include "mapfit/mapping.hpp"

using namespace mapfit;

namespace {

std::vector<FitSample> grid_samples(const MeshPointSet& pts, bool target_is_x) {
    std::vector<FitSample> samples;
    for (int i = 0; i <= pts.segments_i(); ++i)
        for (int j = 0; j <= pts.segments_j(); ++j)
            samples.push_back({pts.xi[i], pts.eta[j],
                               target_is_x ? pts.x(i, j) : pts.y(i, j)});
    return samples;
}

}  // namespace

TEST_SUITE_BEGIN("lsq");

TEST_CASE("assemble shapes and the point-count condition") {
    std::vector<FitSample> three = {{0, 0, 1}, {1, 0, 2}, {0, 1, 3}};
    const DesignSystem sys = assemble(three, 1);
    CHECK(sys.matrix.rows() == 3);
    CHECK(sys.matrix.cols() == 3);

    const MeshPointSet pts = table1_fixture(true);
    const DesignSystem big = assemble(grid_samples(pts, true), 3);
    CHECK(big.matrix.rows() == 25);
    CHECK(big.matrix.cols() == 10);

    std::vector<FitSample> nine(9, FitSample{0, 0, 0});
    CHECK_THROWS_AS(assemble(nine, 3), SolvabilityError);
}

TEST_CASE("exactly determined system interpolates") {
    std::vector<FitSample> pts = {{0, 0, 1.0}, {1, 0, 3.0}, {0, 1, -2.0}};
    const LsqSolution sol = solve(assemble(pts, 1));
    CHECK(sol.rank == 3);
    CHECK(sol.residual_norm <= 1e-10);
    CHECK(sol.dropped_columns.empty());
    CHECK(sol.coeffs(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.coeffs(1.0, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("consistent duplicate rows do not move the solution") {
    std::vector<FitSample> pts = {{0, 0, 1.0}, {1, 0, 3.0}, {0, 1, -2.0}};
    const LsqSolution base = solve(assemble(pts, 1));
    pts.push_back(pts[1]);
    const LsqSolution dup = solve(assemble(pts, 1));
    CHECK((base.coeffs.coeffs() - dup.coeffs.coeffs()).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("degenerate systems are rejected") {
    DesignSystem sys;
    sys.degree = 1;
    sys.matrix = Eigen::MatrixXd::Zero(4, 3);
    sys.rhs = Eigen::VectorXd::Ones(4);
    CHECK_THROWS_AS(solve(sys), NumericalFailure);
}

TEST_CASE("rank truncation zeroes dependent columns on the annulus grid") {
    // On a 5 x 7 tensor grid only xi exponents <= 4 are independent; the
    // degree-6 basis has three dependent columns, which pivoting drops.
    const MeshPointSet grid = eccentric_points({2.0, 6.0, 2.0, 4, 6});
    const auto fit = fit_inverse(grid, 6, {});
    CHECK(fit.x_fit.dropped_columns.size() == 3);
    CHECK(fit.x_fit.rank == 25);
    for (const MonomialIndex& idx : fit.x_fit.dropped_columns) {
        CHECK(fit.mapping.x_poly.coeff(idx.m, idx.n) == 0.0);
        CHECK(fit.mapping.y_poly.coeff(idx.m, idx.n) == 0.0);
    }
}

TEST_CASE("residual orthogonality for retained columns") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    std::vector<FitSample> pts;
    for (int k = 0; k < 40; ++k)
        pts.push_back({U(rng), U(rng), U(rng)});
    const DesignSystem sys = assemble(pts, 3);
    const LsqSolution sol = solve(sys);

    const Eigen::VectorXd residual = sys.matrix * sol.coeffs.coeffs() - sys.rhs;
    CHECK(std::abs(residual.norm() - sol.residual_norm) <=
          1e-10 * std::max(1.0, sol.residual_norm));
    const Eigen::VectorXd gram = sys.matrix.transpose() * residual;
    CHECK(gram.norm() <= 1e-8 * sys.matrix.norm() * sys.rhs.norm());
}

TEST_CASE("solution is invariant under row permutation") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    std::vector<FitSample> pts;
    for (int k = 0; k < 25; ++k)
        pts.push_back({U(rng), U(rng), U(rng)});
    const LsqSolution a = solve(assemble(pts, 2));
    std::shuffle(pts.begin(), pts.end(), rng);
    const LsqSolution b = solve(assemble(pts, 2));
    CHECK((a.coeffs.coeffs() - b.coeffs.coeffs()).lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("recovers a generating polynomial exactly") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const int degree = 1 + rep % 4;
        Eigen::VectorXd c(monomial_count(degree));
        for (Eigen::Index k = 0; k < c.size(); ++k)
            c[k] = U(rng);
        const Poly2D gen(degree, c);
        std::vector<FitSample> pts;
        for (int k = 0; k < monomial_count(degree) + 10; ++k) {
            const double u = U(rng), v = U(rng);
            pts.push_back({u, v, gen(u, v)});
        }
        const LsqSolution sol = solve(assemble(pts, degree));
        CHECK((sol.coeffs.coeffs() - c).lpNorm<Eigen::Infinity>() < 1e-8);
    }
}

TEST_CASE("agrees with a normal-equations reference on a tame system") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<FitSample> pts;
    for (int k = 0; k < 30; ++k)
        pts.push_back({U(rng), U(rng), U(rng)});
    const DesignSystem sys = assemble(pts, 2);
    const LsqSolution sol = solve(sys);
    const Eigen::VectorXd ref = oracles::normal_equations_solve(sys.matrix, sys.rhs);
    CHECK((sol.coeffs.coeffs() - ref).lpNorm<Eigen::Infinity>() < 1e-8);
}

TEST_CASE("column equilibration leaves a well-posed solution unchanged") {
    std::mt19937 rng(64);
    std::uniform_real_distribution<double> U(1.0, 4.0);
    std::vector<FitSample> pts;
    for (int k = 0; k < 30; ++k)
        pts.push_back({U(rng), U(rng), U(rng)});
    const DesignSystem sys = assemble(pts, 3);
    const LsqSolution plain = solve(sys);
    LsqOptions opts;
    opts.normalize = true;
    const LsqSolution scaled = solve(sys, opts);
    CHECK((plain.coeffs.coeffs() - scaled.coeffs.coeffs()).lpNorm<Eigen::Infinity>() < 1e-7);
}

TEST_SUITE_END();
