#include "mapfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

MetricTerms metric_from_jet(const MappingJet& jet, const MetricOptions& opts) {
    const double jac = jet.x_xi * jet.y_eta - jet.x_eta * jet.y_xi;
    if (std::abs(jac) <= opts.jac_tol)
        throw SingularMapping("mapping Jacobian " + std::to_string(jac) +
                                  " within tolerance of zero at (x=" + std::to_string(jet.x) +
                                  ", y=" + std::to_string(jet.y) + ")",
                              jet.x, jet.y);

    MetricTerms t;
    t.jac = jac;
    t.xi_x = jet.y_eta / jac;
    t.xi_y = -jet.x_eta / jac;
    t.eta_x = -jet.y_xi / jac;
    t.eta_y = jet.x_xi / jac;

    const double alpha = jet.x_eta * jet.x_eta + jet.y_eta * jet.y_eta;
    const double beta = jet.x_xi * jet.x_eta + jet.y_xi * jet.y_eta;
    const double gamma = jet.x_xi * jet.x_xi + jet.y_xi * jet.y_xi;
    const double r1 =
        -(alpha * jet.x_xixi - 2.0 * beta * jet.x_xieta + gamma * jet.x_etaeta) / (jac * jac);
    const double r2 =
        -(alpha * jet.y_xixi - 2.0 * beta * jet.y_xieta + gamma * jet.y_etaeta) / (jac * jac);

    // 2x2 Cramer solve of [x_xi x_eta; y_xi y_eta] [P; Q] = [r1; r2];
    // the system determinant is jac, already guarded above.
    t.lap_xi = (r1 * jet.y_eta - r2 * jet.x_eta) / jac;
    t.lap_eta = (r2 * jet.x_xi - r1 * jet.y_xi) / jac;
    return t;
}

MetricTerms metric_from_inverse(const InverseMapping& g, double xi, double eta,
                                const MetricOptions& opts) {
    return metric_from_jet(inverse_jet(g, xi, eta), opts);
}

MetricTerms metric_from_forward(const ForwardMapping& f, double x, double y,
                                const MetricOptions& opts) {
    const Poly2D xi_x = f.xi_poly.derivative(1, 0);
    const Poly2D xi_y = f.xi_poly.derivative(0, 1);
    const Poly2D eta_x = f.eta_poly.derivative(1, 0);
    const Poly2D eta_y = f.eta_poly.derivative(0, 1);

    MetricTerms t;
    t.xi_x = xi_x(x, y);
    t.xi_y = xi_y(x, y);
    t.eta_x = eta_x(x, y);
    t.eta_y = eta_y(x, y);
    const double det = t.xi_x * t.eta_y - t.xi_y * t.eta_x;
    if (std::abs(det) <= opts.jac_tol)
        throw SingularMapping("forward mapping Jacobian determinant " + std::to_string(det) +
                                  " within tolerance of zero at (x=" + std::to_string(x) +
                                  ", y=" + std::to_string(y) + ")",
                              x, y);
    t.jac = 1.0 / det;
    t.lap_xi = f.xi_poly.derivative(2, 0)(x, y) + f.xi_poly.derivative(0, 2)(x, y);
    t.lap_eta = f.eta_poly.derivative(2, 0)(x, y) + f.eta_poly.derivative(0, 2)(x, y);
    return t;
}

double MetricDiscrepancy::max_component() const {
    return std::max({xi_x, xi_y, eta_x, eta_y, lap_xi, lap_eta, jac});
}

MetricDiscrepancy consistency_check(const ForwardMapping& f, const InverseMapping& g,
                                    const MeshPointSet& grid, const MetricOptions& opts) {
    MetricDiscrepancy d;
    const InverseJetEvaluator jet(g);
    for (int i = 0; i <= grid.segments_i(); ++i) {
        for (int j = 0; j <= grid.segments_j(); ++j) {
            const MetricTerms mi = metric_from_jet(jet(grid.xi[i], grid.eta[j]), opts);
            const auto [gx, gy] = eval_inverse(g, grid.xi[i], grid.eta[j]);
            const MetricTerms mf = metric_from_forward(f, gx, gy, opts);
            d.xi_x = std::max(d.xi_x, std::abs(mf.xi_x - mi.xi_x));
            d.xi_y = std::max(d.xi_y, std::abs(mf.xi_y - mi.xi_y));
            d.eta_x = std::max(d.eta_x, std::abs(mf.eta_x - mi.eta_x));
            d.eta_y = std::max(d.eta_y, std::abs(mf.eta_y - mi.eta_y));
            d.lap_xi = std::max(d.lap_xi, std::abs(mf.lap_xi - mi.lap_xi));
            d.lap_eta = std::max(d.lap_eta, std::abs(mf.lap_eta - mi.lap_eta));
            d.jac = std::max(d.jac, std::abs(mf.jac - mi.jac));
        }
    }
    return d;
}

}  // namespace mapfit
