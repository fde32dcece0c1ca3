// Stacked least-squares systems for polynomial surface fits.
//
// Raw monomials on O(1)-O(10) coordinate ranges are ill-conditioned at the
// degrees used here (up to 7), and tensor-product sample grids make some
// columns exactly dependent.  The solver therefore uses a Householder QR
// factorization with column pivoting: columns whose pivot magnitude falls
// below rel_tol times the largest pivot are dropped and their coefficients
// forced to exact zero.
#ifndef MAPFIT_LSQ_HPP
#define MAPFIT_LSQ_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "mapfit/poly2d.hpp"

namespace mapfit {

// One fit sample: basis coordinates (u, v) and the value to reproduce.
struct FitSample {
    double u = 0.0;
    double v = 0.0;
    double target = 0.0;
};

// Stacked design matrix over all samples.  Row k is
// basis_row(degree, u_k, v_k); column order is the canonical monomial order.
struct DesignSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    int degree = 0;
};

struct LsqOptions {
    // Relative pivot threshold for dropping columns.
    double rel_tol = 1e-10;
    // Optional column equilibration (each column scaled by its max
    // magnitude before factorization, coefficients unscaled afterwards).
    // Off by default: the bundled examples fit raw coordinates.
    bool normalize = false;
};

struct LsqSolution {
    Poly2D coeffs;
    double residual_norm = 0.0;  // ||matrix * coeffs - rhs||, recomputed after the solve
    int rank = 0;
    std::vector<MonomialIndex> dropped_columns;
};

// Builds the design system.  Throws SolvabilityError when there are fewer
// samples than unknowns (the point-count condition P >= (M+1)(M+2)/2).
DesignSystem assemble(std::span<const FitSample> samples, int degree);

// Least-squares solve with column pivoting and rank truncation.
// Throws NumericalFailure for an all-zero design matrix.
LsqSolution solve(const DesignSystem& sys, const LsqOptions& opts = {});

// Shared-factorization variant: one design matrix, several right-hand
// sides (one per column of rhs).  All solutions share rank and dropped
// columns.  Used when fitting the two components of a mapping.
std::vector<LsqSolution> solve_multi(const Eigen::MatrixXd& matrix,
                                     const Eigen::MatrixXd& rhs,
                                     int degree,
                                     const LsqOptions& opts = {});

}  // namespace mapfit

#endif
