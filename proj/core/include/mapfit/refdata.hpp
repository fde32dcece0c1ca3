// Published reference values for the bundled example problems, used by the
// verify command and the acceptance suite.
#ifndef MAPFIT_REFDATA_HPP
#define MAPFIT_REFDATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "mapfit/poly2d.hpp"

namespace mapfit::refdata {

// Two coefficient columns over the canonical monomial order.
struct CoeffTable {
    int degree = 0;
    std::vector<MonomialIndex> index;
    std::vector<double> first;   // xi- or x-component coefficients
    std::vector<double> second;  // eta- or y-component coefficients
};

// Cartesian example (I=4, J=4, M=3).
const CoeffTable& cartesian_forward_coeffs();
const CoeffTable& cartesian_inverse_coeffs();

// Annulus fits (a=2, R=6, I=4, J=6, M=6).
const CoeffTable& concentric_inverse_coeffs();
const CoeffTable& eccentric_inverse_coeffs();

// Reference potential on the concentric annulus (phi_a = 0, phi_R = 1):
// published numeric values per node and the exact radial profile.
struct PotentialReference {
    std::vector<double> xi;
    std::vector<double> eta_deg;
    Eigen::MatrixXd numeric;  // rows follow xi, columns follow eta_deg
    std::vector<double> exact;
};
const PotentialReference& concentric_potential();

// Published accuracy of the eccentric inverse mapping (a=2, R=6, c_I=2,
// I=4, J=6, M=6): fitted ("num") and closed-form ("exact") values of one
// component of the mapping jet over the grid nodes.
struct AccuracyTable {
    std::string component;  // "x", "x_xi", ..., "y_etaeta"
    std::vector<double> eta_deg;
    std::vector<double> xi;
    Eigen::MatrixXd num;    // rows follow eta_deg, columns follow xi
    Eigen::MatrixXd exact;
};
const std::vector<AccuracyTable>& eccentric_accuracy();

}  // namespace mapfit::refdata

#endif
