#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jnb {

// Root of the library's exception hierarchy.
//
// InputError: the input fails structural validation (bad file, bad labels,
// something that is not a lattice at all).  The CLI maps these to exit 2.
// MathError: the input is well-formed but the requested property does not
// hold (map is not a join-homomorphism, map is not nilpotent, a verification
// failed).  The CLI maps these to exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct MathError : Error {
    using Error::Error;
};

struct InvalidInput : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct CycleDetected : InputError {
    using InputError::InputError;
};

// A pair of elements without a unique least upper bound or greatest lower
// bound; `first`/`second` carry the witness labels.
struct NotALattice : InputError {
    NotALattice(const std::string& kind, std::string x, std::string y)
        : InputError("not a lattice: no unique " + kind + " for (" + x + ", " + y + ")"),
          first(std::move(x)),
          second(std::move(y)) {}
    std::string first, second;
};

struct NoBoundedStructure : InputError {
    using InputError::InputError;
};

struct NotComparable : InputError {
    using InputError::InputError;
};

struct TooLarge : InputError {
    using InputError::InputError;
};

struct DimensionMismatch : InputError {
    using InputError::InputError;
};

struct NotJoinHom : MathError {
    NotJoinHom(std::string x, std::string y)
        : MathError("not a join-homomorphism: value at join of (" + x + ", " + y +
                    ") differs from join of values"),
          first(std::move(x)),
          second(std::move(y)) {}
    std::string first, second;
};

struct ZeroNotFixed : MathError {
    using MathError::MathError;
};

struct NotNilpotent : MathError {
    using MathError::MathError;
};

// A required condition check failed before a construction was attempted.
struct PreconditionFailed : MathError {
    using MathError::MathError;
};

struct VerificationFailed : MathError {
    using MathError::MathError;
};

struct NoPreimage : MathError {
    using MathError::MathError;
};

struct NoAtomPreimage : MathError {
    using MathError::MathError;
};

struct Stalled : MathError {
    using MathError::MathError;
};

struct HypothesesNotMet : MathError {
    using MathError::MathError;
};

struct EmptyBase : MathError {
    using MathError::MathError;
};

}  // namespace jnb
