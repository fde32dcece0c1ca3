#include "mapfit/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

DesignSystem assemble(std::span<const FitSample> samples, int degree) {
    const int cols = monomial_count(degree);
    const auto rows = static_cast<Eigen::Index>(samples.size());
    if (rows < cols)
        throw SolvabilityError(
            "least-squares fit of degree " + std::to_string(degree) + " needs at least " +
            std::to_string(cols) + " points (the point count must be equal to or greater "
            "than the number of unknowns (M+1)(M+2)/2), got " + std::to_string(rows));

    DesignSystem sys;
    sys.degree = degree;
    sys.matrix.resize(rows, cols);
    sys.rhs.resize(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
        sys.matrix.row(k) = basis_row(degree, samples[k].u, samples[k].v).transpose();
        sys.rhs[k] = samples[k].target;
    }
    return sys;
}

std::vector<LsqSolution> solve_multi(const Eigen::MatrixXd& matrix,
                                     const Eigen::MatrixXd& rhs,
                                     int degree,
                                     const LsqOptions& opts) {
    const Eigen::Index rows = matrix.rows();
    const Eigen::Index cols = matrix.cols();
    if (cols != monomial_count(degree))
        throw InvalidInput("design matrix has " + std::to_string(cols) +
                           " columns, expected " + std::to_string(monomial_count(degree)));
    if (rhs.rows() != rows)
        throw InvalidInput("right-hand side length does not match the design matrix");
    if (matrix.lpNorm<Eigen::Infinity>() == 0.0)
        throw NumericalFailure("degenerate least-squares system: all-zero design matrix");

    // Optional column equilibration.
    Eigen::VectorXd scale = Eigen::VectorXd::Ones(cols);
    Eigen::MatrixXd work = matrix;
    if (opts.normalize) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double s = matrix.col(c).cwiseAbs().maxCoeff();
            if (s > 0.0) {
                scale[c] = s;
                work.col(c) /= s;
            }
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(work);
    const Eigen::VectorXd rdiag =
        qr.matrixR().diagonal().head(std::min(rows, cols)).cwiseAbs();
    const double max_pivot = rdiag.size() > 0 ? rdiag.maxCoeff() : 0.0;
    if (max_pivot == 0.0)
        throw NumericalFailure("degenerate least-squares system: zero pivot column space");

    // Rank by the relative pivot rule.  Pivoting orders the diagonal by
    // decreasing magnitude, so the retained block is contiguous.
    int rank = 0;
    while (rank < rdiag.size() && rdiag[rank] >= opts.rel_tol * max_pivot)
        ++rank;

    // Q^T rhs, then the triangular solve on the retained block; dropped
    // (permuted-to-the-back) coefficients are exact zeros.
    Eigen::MatrixXd qtb = rhs;
    qtb.applyOnTheLeft(qr.householderQ().adjoint());
    Eigen::MatrixXd top = qtb.topRows(rank);
    qr.matrixR().topLeftCorner(rank, rank).triangularView<Eigen::Upper>().solveInPlace(top);

    const auto& perm = qr.colsPermutation().indices();
    std::vector<MonomialIndex> dropped;
    for (Eigen::Index k = rank; k < cols; ++k)
        dropped.push_back(monomial_indices(degree)[static_cast<std::size_t>(perm[k])]);
    std::sort(dropped.begin(), dropped.end(), [](const MonomialIndex& a, const MonomialIndex& b) {
        return monomial_position(a) < monomial_position(b);
    });

    std::vector<LsqSolution> solutions;
    solutions.reserve(static_cast<std::size_t>(rhs.cols()));
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
        for (Eigen::Index k = 0; k < rank; ++k)
            x[perm[k]] = top(k, j);
        if (opts.normalize)
            x.array() /= scale.array();

        LsqSolution sol;
        sol.coeffs = Poly2D(degree, x);
        sol.residual_norm = (matrix * x - rhs.col(j)).norm();
        sol.rank = rank;
        sol.dropped_columns = dropped;
        solutions.push_back(std::move(sol));
    }
    return solutions;
}

LsqSolution solve(const DesignSystem& sys, const LsqOptions& opts) {
    return solve_multi(sys.matrix, sys.rhs, sys.degree, opts)[0];
}

}  // namespace mapfit
