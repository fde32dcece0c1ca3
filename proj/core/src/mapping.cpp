#include "mapfit/mapping.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mapfit/errors.hpp"

namespace mapfit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_shape(const MeshPointSet& p) {
    const auto ni = p.xi.size();
    const auto nj = p.eta.size();
    if (ni < 2 || nj < 2)
        throw InvalidInput("mesh point set needs at least a 2 x 2 grid");
    if (p.x.rows() != ni || p.x.cols() != nj || p.y.rows() != ni || p.y.cols() != nj)
        throw InvalidInput("mesh point arrays do not match the grid extents");
}

double wrap_angle(double theta, double period) {
    double t = std::fmod(theta, period);
    if (t < 0.0)
        t += period;
    return t;
}

}  // namespace

void MeshPointSet::validate() const {
    check_shape(*this);
    for (Eigen::Index i = 0; i + 1 < xi.size(); ++i)
        if (!(xi[i] < xi[i + 1]))
            throw InvalidInput("xi grid lines must be strictly increasing");
    for (Eigen::Index j = 0; j + 1 < eta.size(); ++j)
        if (!(eta[j] < eta[j + 1]))
            throw InvalidInput("eta grid lines must be strictly increasing");

    if (topology == Topology::polar_closed) {
        const int J = segments_j();
        if (std::abs((eta[J] - eta[0]) - kTwoPi) > 1e-12)
            throw SeamError("closed polar grid must span exactly 2*pi in eta");
        for (Eigen::Index i = 0; i < xi.size(); ++i) {
            if (std::abs(x(i, 0) - x(i, J)) > 1e-9 || std::abs(y(i, 0) - y(i, J)) > 1e-9)
                throw SeamError("seam columns j=0 and j=J must hold coincident points");
        }
    }
}

Eigen::VectorXd seam_adjust(const MeshPointSet& points) {
    if (points.topology != Topology::polar_closed)
        throw SeamError("seam adjustment applies only to closed polar grids");
    const int J = points.segments_j();
    Eigen::VectorXd adjusted(points.eta.size());
    for (int j = 0; j <= J; ++j)
        adjusted[j] = points.eta[j] - (kTwoPi / J) * j;
    return adjusted;
}

double seam_restore(double eta_star, int j, int J) {
    if (J <= 0 || j < 0 || j > J)
        throw InvalidInput("seam_restore requires 0 <= j <= J");
    return eta_star + (kTwoPi / J) * j;
}

namespace {

// Stacks every grid point into design rows with (u, v) = physical coords.
Eigen::MatrixXd forward_design(const MeshPointSet& p, int degree, bool drop_last_column) {
    const int I = p.segments_i();
    const int J = p.segments_j();
    const int jmax = drop_last_column ? J - 1 : J;
    Eigen::MatrixXd m((I + 1) * (jmax + 1), monomial_count(degree));
    Eigen::Index row = 0;
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= jmax; ++j)
            m.row(row++) = basis_row(degree, p.x(i, j), p.y(i, j)).transpose();
    return m;
}

void check_point_count(Eigen::Index rows, int degree) {
    if (rows < monomial_count(degree))
        throw SolvabilityError(
            "grid supplies " + std::to_string(rows) + " points but a degree-" +
            std::to_string(degree) + " fit has " + std::to_string(monomial_count(degree)) +
            " unknowns; the point count must be equal to or greater than the unknown count");
}

}  // namespace

ForwardFitResult fit_forward(const MeshPointSet& points, int degree, const FitOptions& opts) {
    check_shape(points);
    const int I = points.segments_i();
    const int J = points.segments_j();
    const bool closed = points.topology == Topology::polar_closed;
    if (closed)
        points.validate();

    ForwardFitResult out;
    out.mapping.topology = points.topology;

    if (closed && opts.seam_mode == SeamMode::drop_duplicate) {
        // xi sees every point; the duplicated seam targets are consistent.
        Eigen::MatrixXd a_xi = forward_design(points, degree, false);
        check_point_count(a_xi.rows(), degree);
        Eigen::VectorXd b_xi(a_xi.rows());
        Eigen::Index row = 0;
        for (int i = 0; i <= I; ++i)
            for (int j = 0; j <= J; ++j)
                b_xi[row++] = points.xi[i];
        out.xi_fit = solve_multi(a_xi, b_xi, degree, opts.lsq)[0];

        // eta drops the duplicate seam column to stay single-valued.
        Eigen::MatrixXd a_eta = forward_design(points, degree, true);
        check_point_count(a_eta.rows(), degree);
        Eigen::VectorXd b_eta(a_eta.rows());
        row = 0;
        for (int i = 0; i <= I; ++i)
            for (int j = 0; j < J; ++j)
                b_eta[row++] = points.eta[j];
        out.eta_fit = solve_multi(a_eta, b_eta, degree, opts.lsq)[0];
    } else {
        Eigen::MatrixXd a = forward_design(points, degree, false);
        check_point_count(a.rows(), degree);
        Eigen::MatrixXd b(a.rows(), 2);
        const Eigen::VectorXd eta_targets =
            closed ? seam_adjust(points) : Eigen::VectorXd(points.eta);
        Eigen::Index row = 0;
        for (int i = 0; i <= I; ++i) {
            for (int j = 0; j <= J; ++j) {
                b(row, 0) = points.xi[i];
                b(row, 1) = eta_targets[j];
                ++row;
            }
        }
        auto fits = solve_multi(a, b, degree, opts.lsq);
        out.xi_fit = std::move(fits[0]);
        out.eta_fit = std::move(fits[1]);
    }

    out.mapping.xi_poly = out.xi_fit.coeffs;
    out.mapping.eta_poly = out.eta_fit.coeffs;
    if (closed) {
        SeamRecord seam;
        seam.mode = opts.seam_mode;
        seam.J = J;
        seam.period = kTwoPi;
        seam.center_x = points.x.mean();
        out.mapping.seam = seam;
    }
    return out;
}

InverseFitResult fit_inverse(const MeshPointSet& points, int degree, const FitOptions& opts) {
    check_shape(points);
    const int I = points.segments_i();
    const int J = points.segments_j();

    Eigen::MatrixXd a((I + 1) * (J + 1), monomial_count(degree));
    check_point_count(a.rows(), degree);
    Eigen::MatrixXd b(a.rows(), 2);
    Eigen::Index row = 0;
    for (int i = 0; i <= I; ++i) {
        for (int j = 0; j <= J; ++j) {
            a.row(row) = basis_row(degree, points.xi[i], points.eta[j]).transpose();
            b(row, 0) = points.x(i, j);
            b(row, 1) = points.y(i, j);
            ++row;
        }
    }
    auto fits = solve_multi(a, b, degree, opts.lsq);

    InverseFitResult out;
    out.mapping.topology = points.topology;
    out.mapping.x_poly = fits[0].coeffs;
    out.mapping.y_poly = fits[1].coeffs;
    out.x_fit = std::move(fits[0]);
    out.y_fit = std::move(fits[1]);
    return out;
}

ForwardValue eval_forward(const ForwardMapping& f, double x, double y) {
    ForwardValue v;
    v.xi = f.xi_poly(x, y);
    v.eta_raw = f.eta_poly(x, y);
    if (!f.seam) {
        v.eta = v.eta_raw;
        return v;
    }
    const SeamRecord& s = *f.seam;
    const double theta = wrap_angle(std::atan2(y, x - s.center_x), s.period);
    if (s.mode == SeamMode::drop_duplicate) {
        const double k = std::round((theta - v.eta_raw) / s.period);
        v.eta = v.eta_raw + k * s.period;
    } else {
        // The adjusted fit needs a column index to restore the branch; off
        // the grid the nearest column by angle stands in.
        const auto j = static_cast<int>(std::lround(theta * s.J / s.period));
        v.eta = v.eta_raw + (s.period / s.J) * std::clamp(j, 0, s.J);
    }
    return v;
}

ForwardValue eval_forward(const ForwardMapping& f, double x, double y, int j) {
    ForwardValue v;
    v.xi = f.xi_poly(x, y);
    v.eta_raw = f.eta_poly(x, y);
    if (!f.seam) {
        v.eta = v.eta_raw;
        return v;
    }
    const SeamRecord& s = *f.seam;
    if (j < 0 || j > s.J)
        throw InvalidInput("seam branch index must satisfy 0 <= j <= J");
    if (s.mode == SeamMode::paper_seam)
        v.eta = v.eta_raw + (s.period / s.J) * j;
    else
        v.eta = j == s.J ? v.eta_raw + s.period : v.eta_raw;
    return v;
}

std::array<double, 2> eval_inverse(const InverseMapping& g, double xi, double eta) {
    return {g.x_poly(xi, eta), g.y_poly(xi, eta)};
}

namespace {

struct StatAccum {
    double max_abs = 0.0;
    double sum_sq = 0.0;
    long count = 0;

    void add(double err) {
        max_abs = std::max(max_abs, std::abs(err));
        sum_sq += err * err;
        ++count;
    }
    ErrorStat finish() const {
        return {max_abs, count > 0 ? std::sqrt(sum_sq / count) : 0.0};
    }
};

}  // namespace

RoundTripReport round_trip_report(const MeshPointSet& points,
                                  const ForwardMapping& f,
                                  const InverseMapping& g) {
    check_shape(points);
    const int I = points.segments_i();
    const int J = points.segments_j();
    StatAccum sxi, seta, sx, sy;
    for (int i = 0; i <= I; ++i) {
        for (int j = 0; j <= J; ++j) {
            // mapped plane: G then F
            const auto [gx, gy] = eval_inverse(g, points.xi[i], points.eta[j]);
            const ForwardValue fv = eval_forward(f, gx, gy, f.seam ? j : 0);
            sxi.add(fv.xi - points.xi[i]);
            seta.add(fv.eta - points.eta[j]);

            // physical plane: F then G
            const ForwardValue fw = eval_forward(f, points.x(i, j), points.y(i, j),
                                                 f.seam ? j : 0);
            const auto [bx, by] = eval_inverse(g, fw.xi, fw.eta);
            sx.add(bx - points.x(i, j));
            sy.add(by - points.y(i, j));
        }
    }
    return {sxi.finish(), seta.finish(), sx.finish(), sy.finish()};
}

namespace {

Eigen::VectorXd refine_lines(const Eigen::VectorXd& lines, int refine) {
    const auto n = lines.size();
    Eigen::VectorXd out((n - 1) * refine + 1);
    Eigen::Index pos = 0;
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        for (int r = 0; r < refine; ++r)
            out[pos++] = lines[k] + (lines[k + 1] - lines[k]) * (static_cast<double>(r) / refine);
    out[pos] = lines[n - 1];
    return out;
}

std::string line_label(const char* name, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.12g", name, value);
    return buf;
}

}  // namespace

PolylineSet generalization_grid(const InverseMapping& g,
                                const Eigen::VectorXd& xi_lines,
                                const Eigen::VectorXd& eta_lines,
                                int refine) {
    if (refine < 1)
        throw InvalidInput("refine factor must be >= 1");
    if (xi_lines.size() < 2 || eta_lines.size() < 2)
        throw InvalidInput("generalization grid needs at least two lines per direction");

    const Eigen::VectorXd fx = refine_lines(xi_lines, refine);
    const Eigen::VectorXd fe = refine_lines(eta_lines, refine);

    PolylineSet set;
    for (Eigen::Index a = 0; a < fx.size(); ++a) {
        Polyline line;
        line.label = line_label("xi", fx[a]);
        line.points.reserve(static_cast<std::size_t>(fe.size()));
        for (Eigen::Index b = 0; b < fe.size(); ++b)
            line.points.push_back(eval_inverse(g, fx[a], fe[b]));
        set.iso_xi.push_back(std::move(line));
    }
    for (Eigen::Index b = 0; b < fe.size(); ++b) {
        Polyline line;
        line.label = line_label("eta", fe[b]);
        line.points.reserve(static_cast<std::size_t>(fx.size()));
        for (Eigen::Index a = 0; a < fx.size(); ++a)
            line.points.push_back(eval_inverse(g, fx[a], fe[b]));
        set.iso_eta.push_back(std::move(line));
    }
    return set;
}

InverseJetEvaluator::InverseJetEvaluator(const InverseMapping& g)
    : x_(g.x_poly),
      y_(g.y_poly),
      x_xi_(g.x_poly.derivative(1, 0)),
      x_eta_(g.x_poly.derivative(0, 1)),
      y_xi_(g.y_poly.derivative(1, 0)),
      y_eta_(g.y_poly.derivative(0, 1)),
      x_xixi_(g.x_poly.derivative(2, 0)),
      x_xieta_(g.x_poly.derivative(1, 1)),
      x_etaeta_(g.x_poly.derivative(0, 2)),
      y_xixi_(g.y_poly.derivative(2, 0)),
      y_xieta_(g.y_poly.derivative(1, 1)),
      y_etaeta_(g.y_poly.derivative(0, 2)) {}

MappingJet InverseJetEvaluator::operator()(double xi, double eta) const {
    MappingJet jet;
    jet.x = x_(xi, eta);
    jet.y = y_(xi, eta);
    jet.x_xi = x_xi_(xi, eta);
    jet.x_eta = x_eta_(xi, eta);
    jet.y_xi = y_xi_(xi, eta);
    jet.y_eta = y_eta_(xi, eta);
    jet.x_xixi = x_xixi_(xi, eta);
    jet.x_xieta = x_xieta_(xi, eta);
    jet.x_etaeta = x_etaeta_(xi, eta);
    jet.y_xixi = y_xixi_(xi, eta);
    jet.y_xieta = y_xieta_(xi, eta);
    jet.y_etaeta = y_etaeta_(xi, eta);
    return jet;
}

MappingJet inverse_jet(const InverseMapping& g, double xi, double eta) {
    return InverseJetEvaluator(g)(xi, eta);
}

}  // namespace mapfit
