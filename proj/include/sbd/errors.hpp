#pragma once

#include <stdexcept>
#include <string>

namespace sbd {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed scalar text.
struct ParseError : Error {
    using Error::Error;
};

// Fraction text with a zero denominator ("p/0").
struct ZeroDenominator : Error {
    using Error::Error;
};

// A formula denominator vanished for the requested entry.
struct SingularFormula : Error {
    using Error::Error;
};

// split_bd needs pairwise distinct nodes.
struct DistinctNodesRequired : Error {
    using Error::Error;
};

// Strict-mode validation failure (node outside the family domain, bad parameter).
struct DomainError : Error {
    using Error::Error;
};

// Neville elimination hit a vanishing pivot; carries the 1-based entry being eliminated.
struct SingularPivot : Error {
    int row, col;
    SingularPivot(int i, int j)
        : Error("singular pivot while eliminating entry (" + std::to_string(i) + "," +
                std::to_string(j) + ")"),
          row(i), col(j) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace sbd
