#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace masolve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point handed to an operation lies outside the domain it requires.
struct DomainMembershipError : Error {
    using Error::Error;
};

/// Geometric precondition failed (probe escaped the domain, invalid facet, ...).
struct GeometryError : Error {
    using Error::Error;
};

/// Input expected to be convex (or convex-compatible) is not.
struct ConvexityError : Error {
    using Error::Error;
};

/// Scalar parameter outside its admissible range.
struct ParameterError : Error {
    using Error::Error;
};

/// Family does not support the requested verification.
struct UnsupportedFamilyError : Error {
    using Error::Error;
};

/// Config/schema validation failure.
struct ValidationError : Error {
    using Error::Error;
};

/// Iterative solve failed; carries the residual history for diagnosis.
struct ConvergenceError : Error {
    std::vector<double> history;
    ConvergenceError(const std::string& what, std::vector<double> hist)
        : Error(what), history(std::move(hist)) {}
};

/// Picard iteration collapsed onto the trivial zero branch.
struct DegeneracyError : Error {
    using Error::Error;
};

}  // namespace masolve
