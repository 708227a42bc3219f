#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Basis-change matrix is (numerically) singular.
struct SingularBasisChange : Error {
    using Error::Error;
};

// Structure constants violate the Jacobi identity beyond tolerance.
struct NotALieAlgebra : Error {
    using Error::Error;
};

// Metric matrix is not symmetric positive definite.
struct DegenerateMetric : Error {
    using Error::Error;
};

// a+d vanishes, so the invariant D = 4(ad-bc)/(a+d)^2 is undefined.
struct DivisionByZero : Error {
    using Error::Error;
};

// Operation requires the metric to be the identity in the given frame.
struct NotOrthonormal : Error {
    using Error::Error;
};

// Non-positive or otherwise unusable integration step.
struct InvalidStep : Error {
    using Error::Error;
};

// Argument lies outside the domain of the exponential/logarithm chart.
struct DomainExceeded : Error {
    using Error::Error;
};

// Normal-form metric parameters outside their admissible range.
struct ParamOutOfRange : Error {
    using Error::Error;
};

// Constants do not solve the local-symmetry system.
struct NotASolution : Error {
    using Error::Error;
};

} // namespace liesym
