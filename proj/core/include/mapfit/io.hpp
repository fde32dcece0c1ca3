// File formats used by the CLI: point-set CSV, mapping JSON, polyline CSV
// and SVG, comparison and solution CSV.  All values are written with 17
// significant digits so files round-trip bit-exactly.
#ifndef MAPFIT_IO_HPP
#define MAPFIT_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "mapfit/mapping.hpp"
#include "mapfit/pde.hpp"

namespace mapfit::io {

std::string format_double(double v);

// CSV with header "xi,eta,x,y", one row per point, row-major in (i, j).
void write_points_csv(std::ostream& os, const MeshPointSet& points);

// Rebuilds the tensor grid from the row-major CSV.  A closed polar topology
// is detected from a 2*pi eta span with coincident seam columns; grid-line
// monotonicity is not enforced here (fitting does not need it).
MeshPointSet read_points_csv(std::istream& is);

// Mapping JSON: format_version, direction, degree, coefficient order
// declaration, the two coefficient arrays, topology and optional seam record.
void write_mapping_json(std::ostream& os, const ForwardMapping& f);
void write_mapping_json(std::ostream& os, const InverseMapping& g);

using AnyMapping = std::variant<ForwardMapping, InverseMapping>;
AnyMapping read_mapping_json(std::istream& is);

// One polyline per block: a "# <label>" line, x,y rows, then a blank line.
void write_polylines_csv(std::ostream& os, const PolylineSet& set);
void write_polylines_svg(std::ostream& os, const PolylineSet& set);

// First column xi, one column per eta in degrees, final exact column.
void write_comparison_csv(std::ostream& os, const ComparisonTable& table);

// Solution CSV: first column xi, one column per eta in degrees.
void write_solution_csv(std::ostream& os, const SolutionField& sol,
                        const Eigen::VectorXd& xi, const Eigen::VectorXd& eta);

}  // namespace mapfit::io

#endif
