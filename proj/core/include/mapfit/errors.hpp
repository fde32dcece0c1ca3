// Error types shared by all mapfit modules.
#ifndef MAPFIT_ERRORS_HPP
#define MAPFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mapfit {

// Invalid argument, precondition violation or unparsable input.
// The CLI maps this family to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Point count too small for the requested polynomial degree.
class SolvabilityError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Seam handling requested on data that is not a closed polar grid,
// or seam columns that do not coincide.
class SeamError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Numerical breakdown: degenerate or singular systems.
// The CLI maps this family to exit code 3.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mapping Jacobian vanished (or nearly so) at an evaluation point.
class SingularMapping : public NumericalFailure {
public:
    SingularMapping(const std::string& what, double u, double v)
        : NumericalFailure(what), u_(u), v_(v) {}
    double u() const { return u_; }
    double v() const { return v_; }

private:
    double u_, v_;
};

}  // namespace mapfit

#endif
