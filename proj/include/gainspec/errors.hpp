#pragma once

#include <stdexcept>
#include <string>

namespace gainspec {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/matrix size disagreement.
struct DimensionError : Error {
    using Error::Error;
};

// Operation requires a connected graph.
struct ConnectivityError : Error {
    using Error::Error;
};

// Operation-specific precondition failed (non-bipartite input where
// bipartiteness is required, order-dependent graph where a well-defined
// D^max is needed, vertex count over an enumeration bound, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Two graphs expected to share the same underlying graph do not.
struct MismatchError : Error {
    using Error::Error;
};

// A vertex sequence passed as a path has a non-adjacent consecutive pair.
struct InvalidPathError : Error {
    using Error::Error;
};

// An iterative numerical routine failed to converge, or an input violates a
// numerical contract (e.g. a non-Hermitian matrix fed to the eigensolver).
struct NumericalError : Error {
    using Error::Error;
};

// Exhaustive enumeration exceeded its configured cap.
struct ExplosionError : Error {
    using Error::Error;
};

// Malformed input text. `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace gainspec
