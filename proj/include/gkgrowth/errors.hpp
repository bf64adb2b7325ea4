#pragma once

#include <stdexcept>
#include <string>

namespace gkgrowth {

// Base class for all typed errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Segments i, j of a multisegment are not linked.
struct NotLinked : Error {
    using Error::Error;
};

// An enumeration or poset exploration exceeded its configured bound.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// Evaluation of a Laurent polynomial did not produce an integer.
struct NonIntegralEvaluation : Error {
    using Error::Error;
};

// A cuspidal growth source cannot produce a full polynomial.
struct InsufficientCuspidalData : Error {
    using Error::Error;
};

// Exact growth requested for a multisegment outside the supported classes.
struct UnsupportedMultisegment : Error {
    using Error::Error;
};

// Two partitions of n share the same orbit dimension.
struct AmbiguousExpansion : Error {
    using Error::Error;
};

// A Laurent polynomial is not in the image of expansion_to_growth.
struct NotInImage : Error {
    using Error::Error;
};

// Two partitions passed to an order comparison have different sizes.
struct MismatchedSize : Error {
    using Error::Error;
};

// A multisegment references a symbol the current table does not declare.
struct UnknownSymbol : Error {
    using Error::Error;
};

// Operation defined only for specific matrix sizes.
struct UnsupportedSize : Error {
    using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates a semantic constraint.
struct SemanticError : Error {
    using Error::Error;
};

}  // namespace gkgrowth
