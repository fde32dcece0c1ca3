// Transformed Laplace Dirichlet problem on the rectangular mapped grid.
//
// The operator
//   (xi_x^2 + xi_y^2) phi_xixi + 2 (xi_x eta_x + xi_y eta_y) phi_xieta
//   + (eta_x^2 + eta_y^2) phi_etaeta + lap(xi) phi_xi + lap(eta) phi_eta = 0
// is discretized with second-order central differences on the uniform
// (xi, eta) grid.  Dirichlet values are imposed on xi = a and xi = R;
// the symmetry conditions d(phi)/d(eta) = 0 at eta = 0 and eta = pi are
// imposed by ghost-node reflection, keeping the scheme second order.
#ifndef MAPFIT_PDE_HPP
#define MAPFIT_PDE_HPP

#include <Eigen/Dense>
#include <functional>

#include "mapfit/geometry.hpp"
#include "mapfit/metrics.hpp"

namespace mapfit {

enum class MetricSource { inverse_fit, forward_fit, analytic_oracle };

struct DirichletProblem {
    AnnulusSpec spec;
    int degree = 6;  // mapping fit degree
    double phi_a = 0.0;
    double phi_R = 1.0;
    MetricSource metric_source = MetricSource::inverse_fit;
    LsqOptions lsq;
    MetricOptions metric;
};

// Dense system over the unknowns: rows i = 1..I-1 (xi interior), all
// columns j = 0..J.  Dirichlet rows are eliminated into the right-hand side.
struct AssembledSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd xi;   // grid lines, length I+1
    Eigen::VectorXd eta;  // grid lines, length J+1
    double phi_a = 0.0;
    double phi_R = 0.0;

    int unknown_count() const { return static_cast<int>(b.size()); }
    int unknown_index(int i, int j) const {
        return (i - 1) * static_cast<int>(eta.size()) + j;
    }
};

// Metric terms per node; receives the node indices along with (xi, eta) so
// sources that live in the physical plane can look up the node position.
using MetricField = std::function<MetricTerms(int i, int j, double xi, double eta)>;

// Low-level assembly on an explicit uniform grid.  Throws NumericalFailure
// naming the node when the metric is singular there.
AssembledSystem assemble_on_grid(const Eigen::VectorXd& xi, const Eigen::VectorXd& eta,
                                 const MetricField& metric_at, double phi_a, double phi_R);

// Generates the annulus grid, fits the mapping (or uses the closed form),
// and assembles the discrete operator with the chosen metric source.
AssembledSystem assemble(const DirichletProblem& problem);

struct SolutionField {
    Eigen::MatrixXd phi;  // (I+1) x (J+1), boundary rows exactly phi_a / phi_R
    double residual_norm = 0.0;
    // Discrete maximum principle: all values within the boundary range.
    // Holds on the bundled configurations; reported, not enforced.
    bool max_principle_ok = false;
};

// Direct dense solve.  Throws NumericalFailure on a singular system or a
// residual above 1e-10 * ||b||.
SolutionField solve(const AssembledSystem& system);

// Exact potential between concentric circles of radii a < R held at phi_a
// and phi_R:  phi(r) = (phi_R ln(r/a) - phi_a ln(r/R)) / ln(R/a).
double exact_concentric(double phi_a, double phi_R, double a, double R, double r);

// Solution values next to the exact concentric profile, one row per xi line
// and one column per eta line, plus the exact column.
struct ComparisonTable {
    Eigen::VectorXd xi;
    std::vector<double> eta_deg;
    Eigen::MatrixXd numeric;
    Eigen::VectorXd exact;
    double max_abs_error = 0.0;
};

// Requires a concentric problem (c_I = 0); there is no closed form otherwise.
ComparisonTable compare_with_exact(const SolutionField& sol, const DirichletProblem& problem);

}  // namespace mapfit

#endif
