#pragma once

#include <stdexcept>
#include <string>

namespace bdk {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input: graph files, omega specs, CLI usage.
struct ParseError : Error {
    using Error::Error;
};

struct NotStronglyConnected : Error {
    using Error::Error;
};

// l does not divide the period (cyclic classes, cyclic decomposition).
struct InvalidModulus : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct HypothesisNotSatisfied : Error {
    using Error::Error;
};

// The unit class of K_0 is torsion; divisibility recovery is undefined.
struct UnitClassTorsion : Error {
    using Error::Error;
};

// Two routes that must agree by theory disagreed: a bug, never a result.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

} // namespace bdk
