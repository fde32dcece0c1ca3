// Metric terms of a coordinate transformation: the first derivatives of the
// forward map, the Laplacians of xi and eta, and the Jacobian
// J = x_xi y_eta - x_eta y_xi.  These are the coefficient fields of the
// transformed Laplace operator assembled in the pde module.
//
// From an inverse mapping the first derivatives follow from the Jacobian
// inverse and the Laplacians P = lap(xi), Q = lap(eta) from the 2x2 system
//   J^2 (P x_xi + Q x_eta) = -(alpha x_xixi - 2 beta x_xieta + gamma x_etaeta)
//   J^2 (P y_xi + Q y_eta) = -(alpha y_xixi - 2 beta y_xieta + gamma y_etaeta)
// with alpha = x_eta^2 + y_eta^2, beta = x_xi x_eta + y_xi y_eta,
// gamma = x_xi^2 + y_xi^2.
#ifndef MAPFIT_METRICS_HPP
#define MAPFIT_METRICS_HPP

#include "mapfit/mapping.hpp"

namespace mapfit {

struct MetricTerms {
    double xi_x = 0.0, xi_y = 0.0;
    double eta_x = 0.0, eta_y = 0.0;
    double lap_xi = 0.0, lap_eta = 0.0;
    double jac = 0.0;  // x_xi y_eta - x_eta y_xi
};

struct MetricOptions {
    // Jacobian magnitudes at or below this are treated as singular.
    double jac_tol = 1e-8;
};

// Metric terms from value/derivative data of an inverse mapping point.
// Accepts fitted polynomials and closed-form oracles alike, so oracle and
// fit paths share one code path.  Throws SingularMapping when |jac| <= tol.
MetricTerms metric_from_jet(const MappingJet& jet, const MetricOptions& opts = {});

MetricTerms metric_from_inverse(const InverseMapping& g, double xi, double eta,
                                const MetricOptions& opts = {});

// Metric terms by direct differentiation of a forward mapping at (x, y);
// jac is recovered as 1 / (xi_x eta_y - xi_y eta_x).
MetricTerms metric_from_forward(const ForwardMapping& f, double x, double y,
                                const MetricOptions& opts = {});

// Componentwise maxima of |forward-route - inverse-route| metric terms over
// a grid, with the forward route evaluated at G(xi_i, eta_j).
struct MetricDiscrepancy {
    double xi_x = 0.0, xi_y = 0.0, eta_x = 0.0, eta_y = 0.0;
    double lap_xi = 0.0, lap_eta = 0.0, jac = 0.0;

    double max_component() const;
};

MetricDiscrepancy consistency_check(const ForwardMapping& f, const InverseMapping& g,
                                    const MeshPointSet& grid,
                                    const MetricOptions& opts = {});

}  // namespace mapfit

#endif
