#pragma once

#include <stdexcept>
#include <string>

namespace beable {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generators or operands of mismatched ambient dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A construction requiring a non-abelian algebra was given an abelian one.
struct AbelianAlgebra : Error {
    using Error::Error;
};

/// E1*E2 vanished: the separation hypothesis of the EPR construction fails.
struct SchliederFailure : Error {
    using Error::Error;
};

/// The two factor algebras do not mutually commute.
struct NonCommutingFactors : Error {
    using Error::Error;
};

/// A joint distribution was requested for operators that do not commute.
struct NonCommutingPair : Error {
    using Error::Error;
};

/// The constrained symmetry family for a measurement context is trivial.
struct EmptySymmetryFamily : Error {
    using Error::Error;
};

/// A theorem verifier was invoked with a failed premise; the message names it.
struct PremiseFailure : Error {
    using Error::Error;
};

/// Exponents a, b with a*b = 0 (mod d) make the Weyl contradiction vacuous.
struct DegenerateChoice : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

}  // namespace beable
