#include "mapfit/poly2d.hpp"

#include <cmath>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

int monomial_count(int degree) {
    if (degree < 0)
        throw InvalidInput("polynomial degree must be >= 0, got " + std::to_string(degree));
    return (degree + 1) * (degree + 2) / 2;
}

std::vector<MonomialIndex> monomial_indices(int degree) {
    std::vector<MonomialIndex> idx;
    idx.reserve(static_cast<std::size_t>(monomial_count(degree)));
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; n <= m; ++n)
            idx.push_back({m, n});
    return idx;
}

int monomial_position(const MonomialIndex& idx) {
    if (idx.m < 0 || idx.n < 0 || idx.n > idx.m)
        throw InvalidInput("monomial index requires 0 <= n <= m");
    return idx.m * (idx.m + 1) / 2 + idx.n;
}

Eigen::VectorXd basis_row(int degree, double u, double v) {
    const int count = monomial_count(degree);
    if (!std::isfinite(u) || !std::isfinite(v))
        throw InvalidInput("basis_row requires finite coordinates");

    // Power tables; entry 0 is 1 so that 0^0 = 1.
    Eigen::VectorXd up(degree + 1), vp(degree + 1);
    up[0] = 1.0;
    vp[0] = 1.0;
    for (int k = 1; k <= degree; ++k) {
        up[k] = up[k - 1] * u;
        vp[k] = vp[k - 1] * v;
    }

    Eigen::VectorXd row(count);
    int pos = 0;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; n <= m; ++n)
            row[pos++] = up[m - n] * vp[n];
    return row;
}

Poly2D::Poly2D() : degree_(0), coeffs_(Eigen::VectorXd::Zero(1)) {}

Poly2D::Poly2D(int degree, Eigen::VectorXd coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != monomial_count(degree))
        throw InvalidInput("coefficient vector has length " + std::to_string(coeffs_.size()) +
                           ", expected " + std::to_string(monomial_count(degree)) +
                           " for degree " + std::to_string(degree));
}

Poly2D Poly2D::zero(int degree) {
    return Poly2D(degree, Eigen::VectorXd::Zero(monomial_count(degree)));
}

double Poly2D::coeff(int m, int n) const {
    if (m > degree_)
        return 0.0;
    return coeffs_[monomial_position({m, n})];
}

double Poly2D::operator()(double u, double v) const {
    return coeffs_.dot(basis_row(degree_, u, v));
}

namespace {

// Falling factorial p (p-1) ... (p-k+1) as an exact small integer.
double falling_factorial(int p, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i)
        f *= static_cast<double>(p - i);
    return f;
}

}  // namespace

Poly2D Poly2D::derivative(int order_u, int order_v) const {
    if (order_u < 0 || order_v < 0)
        throw InvalidInput("derivative orders must be >= 0");
    if (order_u == 0 && order_v == 0)
        return *this;

    const int out_degree = degree_ - order_u - order_v;
    if (out_degree < 0)
        return Poly2D::zero(0);

    Eigen::VectorXd out = Eigen::VectorXd::Zero(monomial_count(out_degree));
    for (int m = 0; m <= degree_; ++m) {
        for (int n = 0; n <= m; ++n) {
            const int p = m - n;  // u exponent
            const int q = n;      // v exponent
            if (p < order_u || q < order_v)
                continue;
            const double factor =
                falling_factorial(p, order_u) * falling_factorial(q, order_v);
            const MonomialIndex tgt{m - order_u - order_v, n - order_v};
            out[monomial_position(tgt)] += coeffs_[monomial_position({m, n})] * factor;
        }
    }
    return Poly2D(out_degree, std::move(out));
}

}  // namespace mapfit
