#include "mapfit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "mapfit/errors.hpp"

namespace mapfit::io {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string seam_mode_name(SeamMode m) {
    return m == SeamMode::paper_seam ? "paper-seam" : "drop-duplicate";
}

SeamMode seam_mode_from(const std::string& s) {
    if (s == "paper-seam")
        return SeamMode::paper_seam;
    if (s == "drop-duplicate")
        return SeamMode::drop_duplicate;
    throw InvalidInput("unknown seam mode '" + s + "'");
}

std::string topology_name(Topology t) {
    switch (t) {
        case Topology::cartesian: return "cartesian";
        case Topology::polar_closed: return "polar_closed";
        case Topology::polar_open: return "polar_open";
    }
    return "cartesian";
}

Topology topology_from(const std::string& s) {
    if (s == "cartesian") return Topology::cartesian;
    if (s == "polar_closed") return Topology::polar_closed;
    if (s == "polar_open") return Topology::polar_open;
    throw InvalidInput("unknown topology '" + s + "'");
}

json coeffs_to_json(const Poly2D& p) {
    json arr = json::array();
    for (Eigen::Index k = 0; k < p.coeffs().size(); ++k)
        arr.push_back(p.coeffs()[k]);
    return arr;
}

Poly2D coeffs_from_json(int degree, const json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != monomial_count(degree))
        throw InvalidInput("coefficient array length does not match the declared degree");
    Eigen::VectorXd c(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k)
        c[static_cast<Eigen::Index>(k)] = arr[k].get<double>();
    return Poly2D(degree, std::move(c));
}

json parse_json(std::istream& is) {
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("mapping file is not valid JSON: ") + e.what());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_points_csv(std::ostream& os, const MeshPointSet& points) {
    os << "xi,eta,x,y\n";
    for (int i = 0; i <= points.segments_i(); ++i)
        for (int j = 0; j <= points.segments_j(); ++j)
            os << format_double(points.xi[i]) << ',' << format_double(points.eta[j]) << ','
               << format_double(points.x(i, j)) << ',' << format_double(points.y(i, j))
               << '\n';
}

MeshPointSet read_points_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw InvalidInput("empty points CSV");
    // tolerate a UTF-8 BOM and trailing CR
    if (line.starts_with("\xEF\xBB\xBF"))
        line.erase(0, 3);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "xi,eta,x,y")
        throw InvalidInput("points CSV must start with the header 'xi,eta,x,y'");

    std::vector<std::array<double, 4>> rows;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::array<double, 4> row{};
        std::istringstream ss(line);
        std::string field;
        for (int f = 0; f < 4; ++f) {
            if (!std::getline(ss, field, ','))
                throw InvalidInput("points CSV line " + std::to_string(line_no) +
                                   ": expected 4 comma-separated values");
            try {
                row[f] = std::stod(field);
            } catch (const std::exception&) {
                throw InvalidInput("points CSV line " + std::to_string(line_no) +
                                   ": cannot parse '" + field + "' as a number");
            }
        }
        rows.push_back(row);
    }
    if (rows.size() < 4)
        throw InvalidInput("points CSV needs at least a 2 x 2 grid");

    // Rows are row-major in (i, j): the first block shares xi[0].
    std::size_t cols = 1;
    while (cols < rows.size() && rows[cols][0] == rows[0][0])
        ++cols;
    if (cols < 2 || rows.size() % cols != 0)
        throw InvalidInput("points CSV rows do not form a tensor grid");
    const std::size_t ni = rows.size() / cols;
    if (ni < 2)
        throw InvalidInput("points CSV needs at least two xi lines");

    MeshPointSet p;
    p.xi.resize(static_cast<Eigen::Index>(ni));
    p.eta.resize(static_cast<Eigen::Index>(cols));
    p.x.resize(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(cols));
    p.y.resize(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        p.eta[static_cast<Eigen::Index>(j)] = rows[j][1];
    for (std::size_t i = 0; i < ni; ++i) {
        p.xi[static_cast<Eigen::Index>(i)] = rows[i * cols][0];
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& r = rows[i * cols + j];
            if (r[0] != p.xi[static_cast<Eigen::Index>(i)] ||
                r[1] != p.eta[static_cast<Eigen::Index>(j)])
                throw InvalidInput("points CSV rows do not form a tensor grid (row " +
                                   std::to_string(i * cols + j + 2) + ")");
            p.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[2];
            p.y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[3];
        }
    }

    // Seam detection.
    const Eigen::Index J = p.eta.size() - 1;
    if (std::abs((p.eta[J] - p.eta[0]) - kTwoPi) <= 1e-9) {
        bool coincident = true;
        for (Eigen::Index i = 0; i < p.xi.size(); ++i)
            if (std::abs(p.x(i, 0) - p.x(i, J)) > 1e-9 ||
                std::abs(p.y(i, 0) - p.y(i, J)) > 1e-9)
                coincident = false;
        if (coincident)
            p.topology = Topology::polar_closed;
    }
    return p;
}

namespace {

json mapping_header(int degree, Topology topology) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["degree"] = degree;
    doc["coeff_order"] =
        "total degree then secondary index: (0,0),(1,0),(1,1),(2,0),(2,1),(2,2),...";
    doc["topology"] = topology_name(topology);
    return doc;
}

}  // namespace

void write_mapping_json(std::ostream& os, const ForwardMapping& f) {
    json doc = mapping_header(f.xi_poly.degree(), f.topology);
    doc["direction"] = "forward";
    doc["xi_coeffs"] = coeffs_to_json(f.xi_poly);
    doc["eta_coeffs"] = coeffs_to_json(f.eta_poly);
    if (f.seam) {
        doc["seam"] = {{"mode", seam_mode_name(f.seam->mode)},
                       {"J", f.seam->J},
                       {"period", f.seam->period},
                       {"center_x", f.seam->center_x}};
    }
    os << doc.dump(2) << '\n';
}

void write_mapping_json(std::ostream& os, const InverseMapping& g) {
    json doc = mapping_header(g.x_poly.degree(), g.topology);
    doc["direction"] = "inverse";
    doc["x_coeffs"] = coeffs_to_json(g.x_poly);
    doc["y_coeffs"] = coeffs_to_json(g.y_poly);
    os << doc.dump(2) << '\n';
}

AnyMapping read_mapping_json(std::istream& is) {
    const json doc = parse_json(is);
    try {
        if (doc.at("format_version").get<int>() != kFormatVersion)
            throw InvalidInput("unsupported mapping format_version");
        const int degree = doc.at("degree").get<int>();
        const Topology topology = topology_from(doc.at("topology").get<std::string>());
        const std::string direction = doc.at("direction").get<std::string>();
        if (direction == "forward") {
            ForwardMapping f;
            f.topology = topology;
            f.xi_poly = coeffs_from_json(degree, doc.at("xi_coeffs"));
            f.eta_poly = coeffs_from_json(degree, doc.at("eta_coeffs"));
            if (doc.contains("seam")) {
                const json& s = doc.at("seam");
                SeamRecord seam;
                seam.mode = seam_mode_from(s.at("mode").get<std::string>());
                seam.J = s.at("J").get<int>();
                seam.period = s.at("period").get<double>();
                seam.center_x = s.at("center_x").get<double>();
                f.seam = seam;
            }
            return f;
        }
        if (direction == "inverse") {
            InverseMapping g;
            g.topology = topology;
            g.x_poly = coeffs_from_json(degree, doc.at("x_coeffs"));
            g.y_poly = coeffs_from_json(degree, doc.at("y_coeffs"));
            return g;
        }
        throw InvalidInput("mapping direction must be 'forward' or 'inverse'");
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed mapping JSON: ") + e.what());
    }
}

void write_polylines_csv(std::ostream& os, const PolylineSet& set) {
    auto emit = [&os](const std::vector<Polyline>& lines) {
        for (const Polyline& line : lines) {
            os << "# " << line.label << "\n";
            for (const auto& p : line.points)
                os << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
            os << '\n';
        }
    };
    os << "x,y\n";
    emit(set.iso_xi);
    emit(set.iso_eta);
}

void write_polylines_svg(std::ostream& os, const PolylineSet& set) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto scan = [&](const std::vector<Polyline>& lines) {
        for (const auto& line : lines)
            for (const auto& p : line.points) {
                x0 = std::min(x0, p[0]);
                x1 = std::max(x1, p[0]);
                y0 = std::min(y0, p[1]);
                y1 = std::max(y1, p[1]);
            }
    };
    scan(set.iso_xi);
    scan(set.iso_eta);
    if (x0 > x1) {
        x0 = y0 = 0.0;
        x1 = y1 = 1.0;
    }
    const double margin = 0.05 * std::max(x1 - x0, y1 - y0) + 1e-12;
    x0 -= margin; x1 += margin; y0 -= margin; y1 += margin;
    const double scale = 600.0 / std::max(x1 - x0, y1 - y0);
    const double w = (x1 - x0) * scale, h = (y1 - y0) * scale;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    auto emit = [&](const std::vector<Polyline>& lines, const char* color) {
        for (const auto& line : lines) {
            os << "  <polyline fill=\"none\" stroke=\"" << color
               << "\" stroke-width=\"1\" points=\"";
            for (const auto& p : line.points)
                os << (p[0] - x0) * scale << ',' << h - (p[1] - y0) * scale << ' ';
            os << "\"/>\n";
        }
    };
    emit(set.iso_xi, "#1f77b4");
    emit(set.iso_eta, "#d62728");
    os << "</svg>\n";
}

void write_comparison_csv(std::ostream& os, const ComparisonTable& table) {
    os << "xi";
    for (double deg : table.eta_deg)
        os << ",eta=" << deg;
    os << ",exact\n";
    for (Eigen::Index i = 0; i < table.xi.size(); ++i) {
        os << format_double(table.xi[i]);
        for (Eigen::Index j = 0; j < table.numeric.cols(); ++j)
            os << ',' << format_double(table.numeric(i, j));
        os << ',' << format_double(table.exact[i]) << '\n';
    }
}

void write_solution_csv(std::ostream& os, const SolutionField& sol,
                        const Eigen::VectorXd& xi, const Eigen::VectorXd& eta) {
    os << "xi";
    for (Eigen::Index j = 0; j < eta.size(); ++j)
        os << ",eta=" << 180.0 * eta[j] / std::numbers::pi;
    os << '\n';
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        os << format_double(xi[i]);
        for (Eigen::Index j = 0; j < eta.size(); ++j)
            os << ',' << format_double(sol.phi(i, j));
        os << '\n';
    }
}

}  // namespace mapfit::io
