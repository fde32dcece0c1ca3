// Bivariate monomial basis of bounded total degree, polynomial evaluation
// and exact analytic differentiation.
//
// The basis of total degree M is ordered
//     1, u, v, u^2, uv, v^2, u^3, u^2 v, ...
// i.e. index pairs (m,n) with 0 <= n <= m <= M and monomial u^(m-n) v^n,
// listed by increasing m and then increasing n.  All coefficient files and
// design-matrix columns use this order.
#ifndef MAPFIT_POLY2D_HPP
#define MAPFIT_POLY2D_HPP

#include <Eigen/Dense>
#include <vector>

namespace mapfit {

// Index of one basis monomial u^(m-n) v^n.
struct MonomialIndex {
    int m = 0;  // total degree of the monomial
    int n = 0;  // secondary index, 0 <= n <= m

    friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

// Number of monomials of total degree <= degree: (M+1)(M+2)/2.
int monomial_count(int degree);

// All monomial indices in canonical order.
std::vector<MonomialIndex> monomial_indices(int degree);

// Position of (m,n) in the canonical order: m(m+1)/2 + n.
int monomial_position(const MonomialIndex& idx);

// One design-matrix row: every basis monomial evaluated at (u, v).
// 0^0 evaluates to 1 so the constant monomial is defined everywhere.
Eigen::VectorXd basis_row(int degree, double u, double v);

// Dense bivariate polynomial over the canonical basis.
class Poly2D {
public:
    // Zero constant polynomial.
    Poly2D();

    // Takes ownership of the coefficient vector; its length must equal
    // monomial_count(degree).
    Poly2D(int degree, Eigen::VectorXd coeffs);

    static Poly2D zero(int degree);

    int degree() const { return degree_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    double coeff(int m, int n) const;

    double operator()(double u, double v) const;

    // Exact partial derivative d^(ou+ov) p / du^ou dv^ov as a polynomial of
    // degree max(degree - ou - ov, 0).  Orders beyond the degree give the
    // zero polynomial.
    Poly2D derivative(int order_u, int order_v) const;

private:
    int degree_;
    Eigen::VectorXd coeffs_;
};

}  // namespace mapfit

#endif
