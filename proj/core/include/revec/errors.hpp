#pragma once

#include <stdexcept>
#include <string>

namespace revec {

// Caller broke a precondition (mismatched moduli, undeclared register, bad flag).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (inverse of zero, off-curve point).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A loaded configuration file is malformed; message names the offending field.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance/curve generation exhausted its retry budget.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A linear system handed to the cost fitter is singular.
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A circuit violated its verified contract mid-pipeline.
struct verification_fault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace revec
