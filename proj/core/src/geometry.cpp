#include "mapfit/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void AnnulusSpec::validate() const {
    if (!(0.0 < a && a < R))
        throw InvalidInput("annulus requires 0 < a < R");
    if (!(std::abs(c_I) < R - a))
        throw InvalidInput("annulus requires |c_I| < R - a (inner circle strictly inside)");
    if (I < 1 || J < 1)
        throw InvalidInput("annulus grid extents I, J must be >= 1");
}

MeshPointSet polar_points(double r0, double r1, double theta0, double theta1,
                          int I, int J, bool closed) {
    if (!(0.0 < r0 && r0 < r1))
        throw InvalidInput("polar grid requires 0 < r0 < r1");
    if (!(theta0 < theta1))
        throw InvalidInput("polar grid requires theta0 < theta1");
    if (I < 1 || J < 1)
        throw InvalidInput("polar grid extents I, J must be >= 1");
    if (closed && std::abs((theta1 - theta0) - kTwoPi) > 1e-12)
        throw InvalidInput("closed polar grid requires theta1 - theta0 = 2*pi");

    MeshPointSet p;
    p.topology = closed ? Topology::polar_closed : Topology::polar_open;
    p.xi.resize(I + 1);
    p.eta.resize(J + 1);
    p.x.resize(I + 1, J + 1);
    p.y.resize(I + 1, J + 1);
    for (int i = 0; i <= I; ++i)
        p.xi[i] = r0 + (r1 - r0) * (static_cast<double>(i) / I);
    for (int j = 0; j <= J; ++j)
        p.eta[j] = theta0 + (theta1 - theta0) * (static_cast<double>(j) / J);
    for (int i = 0; i <= I; ++i) {
        for (int j = 0; j <= J; ++j) {
            p.x(i, j) = p.xi[i] * std::cos(p.eta[j]);
            p.y(i, j) = p.xi[i] * std::sin(p.eta[j]);
        }
    }
    p.validate();
    return p;
}

MeshPointSet eccentric_points(const AnnulusSpec& spec) {
    spec.validate();
    MeshPointSet p;
    p.topology = Topology::polar_open;
    p.xi.resize(spec.I + 1);
    p.eta.resize(spec.J + 1);
    p.x.resize(spec.I + 1, spec.J + 1);
    p.y.resize(spec.I + 1, spec.J + 1);
    for (int i = 0; i <= spec.I; ++i)
        p.xi[i] = spec.a + (spec.R - spec.a) * (static_cast<double>(i) / spec.I);
    for (int j = 0; j <= spec.J; ++j)
        p.eta[j] = kPi * j / spec.J;
    for (int i = 0; i <= spec.I; ++i) {
        const double c_i = spec.c_I * i / spec.I;
        for (int j = 0; j <= spec.J; ++j) {
            p.x(i, j) = c_i + p.xi[i] * std::cos(p.eta[j]);
            p.y(i, j) = p.xi[i] * std::sin(p.eta[j]);
        }
    }
    p.validate();
    return p;
}

MappingJet eccentric_oracle(const AnnulusSpec& spec, double xi, double eta) {
    spec.validate();
    const double slack = 1e-9;
    if (xi < spec.a - slack || xi > spec.R + slack)
        throw InvalidInput("oracle point xi=" + std::to_string(xi) + " outside [a, R]");
    if (eta < -slack || eta > kPi + slack)
        throw InvalidInput("oracle point eta=" + std::to_string(eta) + " outside [0, pi]");

    const double k = spec.c_I / (spec.R - spec.a);
    const double c = std::cos(eta);
    const double s = std::sin(eta);

    MappingJet jet;
    jet.x = k * (xi - spec.a) + xi * c;
    jet.y = xi * s;
    jet.x_xi = k + c;
    jet.x_eta = -xi * s;
    jet.y_xi = s;
    jet.y_eta = xi * c;
    jet.x_xixi = 0.0;
    jet.x_xieta = -s;
    jet.x_etaeta = -xi * c;
    jet.y_xixi = 0.0;
    jet.y_xieta = c;
    jet.y_etaeta = -xi * s;
    return jet;
}

MeshPointSet table1_fixture(bool corrected) {
    // 25 correspondences (xi, eta, x, y), row-major in (i, j).
    static constexpr double rows[25][4] = {
        {0.00, 0.00, 1.00, 2.00},  {0.00, 0.25, 1.50, 3.35},  {0.00, 0.50, 2.00, 4.50},
        {0.00, 0.27, 2.50, 5.75},  {0.00, 1.00, 3.00, 7.00},  {0.25, 0.00, 3.10, 1.70},
        {0.25, 0.25, 3.35, 3.20},  {0.25, 0.50, 3.75, 4.60},  {0.25, 0.27, 4.00, 5.90},
        {0.25, 1.00, 4.30, 7.25},  {0.50, 0.00, 5.00, 1.40},  {0.50, 0.25, 5.20, 3.20},
        {0.50, 0.50, 5.30, 4.75},  {0.50, 0.27, 5.30, 6.10},  {0.50, 1.00, 5.50, 7.50},
        {0.75, 0.00, 6.85, 1.25},  {0.75, 0.25, 6.80, 3.20},  {0.75, 0.50, 6.75, 4.85},
        {0.75, 0.27, 6.70, 6.25},  {0.75, 1.00, 6.60, 7.75},  {1.00, 0.00, 9.00, 1.00},
        {1.00, 0.25, 8.70, 3.20},  {1.00, 0.50, 8.40, 5.00},  {1.00, 0.27, 8.20, 6.40},
        {1.00, 1.00, 8.00, 8.00},
    };

    MeshPointSet p;
    p.topology = Topology::cartesian;
    p.xi.resize(5);
    p.eta.resize(5);
    p.x.resize(5, 5);
    p.y.resize(5, 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double* r = rows[i * 5 + j];
            double xi = r[0], eta = r[1];
            if (corrected) {
                if (xi == 0.27) xi = 0.75;
                if (eta == 0.27) eta = 0.75;
            }
            if (j == 0) p.xi[i] = xi;
            if (i == 0) p.eta[j] = eta;
            p.x(i, j) = r[2];
            p.y(i, j) = r[3];
        }
    }
    if (corrected)
        p.validate();
    return p;
}

}  // namespace mapfit
