#pragma once

#include <stdexcept>
#include <string>

namespace thetaclass {

struct GenusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonOrthogonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A counting query fell outside the dependency patterns certified by the oracle sweep.
struct UncertifiedPattern : std::domain_error {
    using std::domain_error::domain_error;
};

// Degree beyond the certified range (5).
struct DegreeOverflow : std::domain_error {
    using std::domain_error::domain_error;
};

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingDatum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace thetaclass
