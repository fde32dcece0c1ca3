#include "mapfit/pde.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

namespace {

double uniform_step(const Eigen::VectorXd& lines, const char* name) {
    const auto n = lines.size();
    if (n < 2)
        throw InvalidInput(std::string(name) + " grid needs at least two lines");
    const double h = (lines[n - 1] - lines[0]) / static_cast<double>(n - 1);
    if (h <= 0.0)
        throw InvalidInput(std::string(name) + " grid lines must increase");
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        if (std::abs((lines[k + 1] - lines[k]) - h) > 1e-9 * std::abs(h))
            throw InvalidInput(std::string(name) + " grid must be uniform for central differences");
    return h;
}

}  // namespace

AssembledSystem assemble_on_grid(const Eigen::VectorXd& xi, const Eigen::VectorXd& eta,
                                 const MetricField& metric_at, double phi_a, double phi_R) {
    const int I = static_cast<int>(xi.size()) - 1;
    const int J = static_cast<int>(eta.size()) - 1;
    if (I < 2)
        throw InvalidInput("need at least one interior xi line (I >= 2)");
    const double dxi = uniform_step(xi, "xi");
    const double deta = uniform_step(eta, "eta");

    AssembledSystem sys;
    sys.xi = xi;
    sys.eta = eta;
    sys.phi_a = phi_a;
    sys.phi_R = phi_R;
    const int n = (I - 1) * (J + 1);
    sys.A = Eigen::MatrixXd::Zero(n, n);
    sys.b = Eigen::VectorXd::Zero(n);

    for (int i = 1; i <= I - 1; ++i) {
        for (int j = 0; j <= J; ++j) {
            MetricTerms t;
            try {
                t = metric_at(i, j, xi[i], eta[j]);
            } catch (const SingularMapping& e) {
                throw NumericalFailure("assembly failed at node (i=" + std::to_string(i) +
                                       ", j=" + std::to_string(j) + "): " + e.what());
            }
            const double c_xixi = t.xi_x * t.xi_x + t.xi_y * t.xi_y;
            const double c_cross = 2.0 * (t.xi_x * t.eta_x + t.xi_y * t.eta_y);
            const double c_etaeta = t.eta_x * t.eta_x + t.eta_y * t.eta_y;
            const double c_xi = t.lap_xi;
            const double c_eta = t.lap_eta;

            const int row = sys.unknown_index(i, j);
            // Neumann reflection: ghost columns fold back into the grid.
            auto reflect = [J](int jj) { return jj < 0 ? -jj : (jj > J ? 2 * J - jj : jj); };
            auto add = [&](int ii, int jj, double w) {
                jj = reflect(jj);
                if (ii == 0)
                    sys.b[row] -= w * phi_a;
                else if (ii == I)
                    sys.b[row] -= w * phi_R;
                else
                    sys.A(row, sys.unknown_index(ii, jj)) += w;
            };

            // phi_xixi
            add(i + 1, j, c_xixi / (dxi * dxi));
            add(i - 1, j, c_xixi / (dxi * dxi));
            add(i, j, -2.0 * c_xixi / (dxi * dxi));
            // phi_etaeta
            add(i, j + 1, c_etaeta / (deta * deta));
            add(i, j - 1, c_etaeta / (deta * deta));
            add(i, j, -2.0 * c_etaeta / (deta * deta));
            // phi_xieta, four-corner stencil
            const double wc = c_cross / (4.0 * dxi * deta);
            add(i + 1, j + 1, wc);
            add(i - 1, j - 1, wc);
            add(i + 1, j - 1, -wc);
            add(i - 1, j + 1, -wc);
            // phi_xi
            add(i + 1, j, c_xi / (2.0 * dxi));
            add(i - 1, j, -c_xi / (2.0 * dxi));
            // phi_eta
            add(i, j + 1, c_eta / (2.0 * deta));
            add(i, j - 1, -c_eta / (2.0 * deta));
        }
    }
    return sys;
}

AssembledSystem assemble(const DirichletProblem& problem) {
    problem.spec.validate();
    const MeshPointSet grid = eccentric_points(problem.spec);

    MetricField field;
    switch (problem.metric_source) {
        case MetricSource::inverse_fit: {
            const auto fit = fit_inverse(grid, problem.degree, {problem.lsq});
            field = [ev = InverseJetEvaluator(fit.mapping), opts = problem.metric](
                        int, int, double xi, double eta) {
                return metric_from_jet(ev(xi, eta), opts);
            };
            break;
        }
        case MetricSource::forward_fit: {
            const auto fit = fit_forward(grid, problem.degree, {problem.lsq});
            field = [f = fit.mapping, grid, opts = problem.metric](int i, int j, double,
                                                                   double) {
                return metric_from_forward(f, grid.x(i, j), grid.y(i, j), opts);
            };
            break;
        }
        case MetricSource::analytic_oracle: {
            field = [spec = problem.spec, opts = problem.metric](int, int, double xi,
                                                                 double eta) {
                return metric_from_jet(eccentric_oracle(spec, xi, eta), opts);
            };
            break;
        }
    }
    return assemble_on_grid(grid.xi, grid.eta, field, problem.phi_a, problem.phi_R);
}

SolutionField solve(const AssembledSystem& system) {
    const int J = static_cast<int>(system.eta.size()) - 1;
    const int I = static_cast<int>(system.xi.size()) - 1;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(system.A);
    if (!lu.isInvertible())
        throw NumericalFailure("discrete Laplace system is singular");
    const Eigen::VectorXd u = lu.solve(system.b);

    SolutionField sol;
    sol.residual_norm = (system.A * u - system.b).norm();
    if (sol.residual_norm > 1e-10 * std::max(system.b.norm(), 1e-300))
        throw NumericalFailure("linear solve residual " + std::to_string(sol.residual_norm) +
                               " exceeds tolerance");

    sol.phi.resize(I + 1, J + 1);
    for (int j = 0; j <= J; ++j) {
        sol.phi(0, j) = system.phi_a;
        sol.phi(I, j) = system.phi_R;
    }
    for (int i = 1; i <= I - 1; ++i)
        for (int j = 0; j <= J; ++j)
            sol.phi(i, j) = u[system.unknown_index(i, j)];

    const double lo = std::min(system.phi_a, system.phi_R) - 1e-9;
    const double hi = std::max(system.phi_a, system.phi_R) + 1e-9;
    sol.max_principle_ok = sol.phi.minCoeff() >= lo && sol.phi.maxCoeff() <= hi;
    return sol;
}

double exact_concentric(double phi_a, double phi_R, double a, double R, double r) {
    if (!(0.0 < a && a < R))
        throw InvalidInput("exact_concentric requires 0 < a < R");
    if (r < a - 1e-12 || r > R + 1e-12)
        throw InvalidInput("exact_concentric requires a <= r <= R");
    return (phi_R * std::log(r / a) - phi_a * std::log(r / R)) / std::log(R / a);
}

ComparisonTable compare_with_exact(const SolutionField& sol, const DirichletProblem& problem) {
    if (problem.spec.c_I != 0.0)
        throw InvalidInput("exact comparison is only available for the concentric case (c_I = 0)");

    const int I = problem.spec.I;
    const int J = problem.spec.J;
    if (sol.phi.rows() != I + 1 || sol.phi.cols() != J + 1)
        throw InvalidInput("solution field does not match the problem grid");

    ComparisonTable table;
    table.xi.resize(I + 1);
    table.exact.resize(I + 1);
    table.numeric = sol.phi;
    for (int j = 0; j <= J; ++j)
        table.eta_deg.push_back(180.0 * j / J);
    for (int i = 0; i <= I; ++i) {
        table.xi[i] = problem.spec.a + (problem.spec.R - problem.spec.a) *
                                           (static_cast<double>(i) / I);
        table.exact[i] = exact_concentric(problem.phi_a, problem.phi_R, problem.spec.a,
                                          problem.spec.R, table.xi[i]);
    }
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j)
            table.max_abs_error =
                std::max(table.max_abs_error, std::abs(sol.phi(i, j) - table.exact[i]));
    return table;
}

}  // namespace mapfit
