// Forward and inverse coordinate mappings between a physical (x, y) region
// and a rectangular mapped (xi, eta) region, fitted by least squares over a
// grid of point correspondences.
//
// Closed polar grids carry a seam: the columns eta = 0 and eta = 2*pi hold
// the same physical points, so the angular target is two-valued there.  Two
// seam treatments are provided:
//   * paper_seam      - subtract (2*pi/J)*j from every angular target before
//                       fitting and add it back afterwards.  Exact at grid
//                       nodes, but restoring the branch off the grid requires
//                       a column index.
//   * drop_duplicate  - fit the angle on columns j = 0..J-1 only and report
//                       it in [0, 2*pi) with the branch on the positive x
//                       axis resolved to 0.  Default, usable off the grid.
#ifndef MAPFIT_MAPPING_HPP
#define MAPFIT_MAPPING_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mapfit/lsq.hpp"
#include "mapfit/poly2d.hpp"

namespace mapfit {

enum class Topology { cartesian, polar_closed, polar_open };

enum class SeamMode { paper_seam, drop_duplicate };

// Grid of correspondences (xi_i, eta_j) <-> (x_ij, y_ij).
struct MeshPointSet {
    Eigen::VectorXd xi;   // length I+1
    Eigen::VectorXd eta;  // length J+1
    Eigen::MatrixXd x;    // (I+1) x (J+1)
    Eigen::MatrixXd y;    // (I+1) x (J+1)
    Topology topology = Topology::cartesian;

    int segments_i() const { return static_cast<int>(xi.size()) - 1; }
    int segments_j() const { return static_cast<int>(eta.size()) - 1; }
    int point_count() const { return static_cast<int>(xi.size() * eta.size()); }

    // Checks shape consistency, strict monotonicity of the grid lines and,
    // for polar_closed, the 2*pi span and seam coincidence.  Generators call
    // this; hand-built sets may skip it (the bundled cartesian fixture keeps
    // a misprinted non-monotone line on purpose).
    void validate() const;
};

struct SeamRecord {
    SeamMode mode = SeamMode::drop_duplicate;
    int J = 0;            // angular segment count of the fitted grid
    double period = 0.0;  // 2*pi
    double center_x = 0.0;  // x of the rotation center, for branch selection
};

struct ForwardMapping {
    Poly2D xi_poly;   // xi(x, y)
    Poly2D eta_poly;  // eta(x, y); seam-adjusted when a seam record is present
    Topology topology = Topology::cartesian;
    std::optional<SeamRecord> seam;
};

struct InverseMapping {
    Poly2D x_poly;  // x(xi, eta)
    Poly2D y_poly;  // y(xi, eta)
    Topology topology = Topology::cartesian;
};

struct FitOptions {
    LsqOptions lsq;
    SeamMode seam_mode = SeamMode::drop_duplicate;
};

struct ForwardFitResult {
    ForwardMapping mapping;
    LsqSolution xi_fit;
    LsqSolution eta_fit;
};

struct InverseFitResult {
    InverseMapping mapping;
    LsqSolution x_fit;
    LsqSolution y_fit;
};

// Least-squares fit of (xi, eta) = F(x, y).  Requires
// (I+1)(J+1) >= (M+1)(M+2)/2.  polar_closed data is seam-handled per
// opts.seam_mode and must satisfy the seam invariants.
ForwardFitResult fit_forward(const MeshPointSet& points, int degree,
                             const FitOptions& opts = {});

// Least-squares fit of (x, y) = G(xi, eta).  No seam handling: x and y are
// single-valued in (xi, eta).
InverseFitResult fit_inverse(const MeshPointSet& points, int degree,
                             const FitOptions& opts = {});

// Seam-adjusted angular targets eta*_j = eta_j - (2*pi/J) j, one per column.
// Requires polar_closed topology.
Eigen::VectorXd seam_adjust(const MeshPointSet& points);

// Restores an angular value from its seam-adjusted form: eta* + (2*pi/J) j.
double seam_restore(double eta_star, int j, int J);

struct ForwardValue {
    double xi = 0.0;
    double eta_raw = 0.0;  // polynomial value (seam-adjusted scale if fitted so)
    double eta = 0.0;      // branch-resolved angle
};

// Evaluates the forward mapping.  Without a seam record eta == eta_raw.
// With one, the branch is chosen by the quadrant of (x - center_x, y).
ForwardValue eval_forward(const ForwardMapping& f, double x, double y);

// Branch resolution with an explicit grid column index (exact at nodes).
ForwardValue eval_forward(const ForwardMapping& f, double x, double y, int j);

std::array<double, 2> eval_inverse(const InverseMapping& g, double xi, double eta);

struct ErrorStat {
    double max_abs = 0.0;
    double rms = 0.0;
};

// Round-trip errors over the training grid: F(G(xi_i, eta_j)) against
// (xi_i, eta_j) and G(F(x_ij, y_ij)) against (x_ij, y_ij).
struct RoundTripReport {
    ErrorStat xi, eta;  // mapped-plane round trip
    ErrorStat x, y;     // physical-plane round trip
};

RoundTripReport round_trip_report(const MeshPointSet& points,
                                  const ForwardMapping& f,
                                  const InverseMapping& g);

struct Polyline {
    std::string label;
    std::vector<std::array<double, 2>> points;
};

struct PolylineSet {
    std::vector<Polyline> iso_xi;   // xi fixed, eta varying
    std::vector<Polyline> iso_eta;  // eta fixed, xi varying
};

// Physical-plane images of the mapped-plane grid lines, refined by inserting
// refine-1 evenly spaced lines in every training interval.  refine = 1 gives
// exactly the training grid images.
PolylineSet generalization_grid(const InverseMapping& g,
                                const Eigen::VectorXd& xi_lines,
                                const Eigen::VectorXd& eta_lines,
                                int refine);

// Values and first/second partial derivatives of one inverse mapping point.
struct MappingJet {
    double x = 0.0, y = 0.0;
    double x_xi = 0.0, x_eta = 0.0;
    double y_xi = 0.0, y_eta = 0.0;
    double x_xixi = 0.0, x_xieta = 0.0, x_etaeta = 0.0;
    double y_xixi = 0.0, y_xieta = 0.0, y_etaeta = 0.0;
};

// Caches the differentiated polynomials so grid sweeps do not refactor them.
class InverseJetEvaluator {
public:
    explicit InverseJetEvaluator(const InverseMapping& g);
    MappingJet operator()(double xi, double eta) const;

private:
    Poly2D x_, y_;
    Poly2D x_xi_, x_eta_, y_xi_, y_eta_;
    Poly2D x_xixi_, x_xieta_, x_etaeta_, y_xixi_, y_xieta_, y_etaeta_;
};

MappingJet inverse_jet(const InverseMapping& g, double xi, double eta);

}  // namespace mapfit

#endif
