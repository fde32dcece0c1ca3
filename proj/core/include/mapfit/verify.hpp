// Reproduction suites: each runs one bundled example end to end and compares
// against embedded reference values.  Hard checks gate the overall result;
// soft checks are informational (published values whose producing solver
// configuration is not fully known).
#ifndef MAPFIT_VERIFY_HPP
#define MAPFIT_VERIFY_HPP

#include <string>
#include <vector>

#include "mapfit/lsq.hpp"

namespace mapfit::verify {

struct Check {
    std::string name;
    double value = 0.0;      // measured error or indicator
    double tolerance = 0.0;  // pass iff value <= tolerance
    bool hard = true;

    bool pass() const { return value <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool ok() const;  // every hard check passes
};

// Known suites: table1, full-circle, sector, concentric, eccentric.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, const LsqOptions& lsq = {});

}  // namespace mapfit::verify

#endif
