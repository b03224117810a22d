/**
 * @file errors.hpp
 * @brief Error hierarchy shared by all linklab components.
 */
#ifndef LINKLAB_ERRORS_HPP
#define LINKLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linklab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or fields, or variable counts).
struct RingMismatchError : Error {
    using Error::Error;
};

/// Exponent-vector lengths disagree.
struct DimensionError : Error {
    using Error::Error;
};

/// Leading term (or similar) requested from the zero polynomial.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// Operation defined only for nonzero modules.
struct ZeroModuleError : Error {
    using Error::Error;
};

/// Graded-only operation received a non-homogeneous input.
struct NonHomogeneousError : Error {
    using Error::Error;
};

/// Expected ideal/module containment does not hold.
struct ContainmentError : Error {
    using Error::Error;
};

/// A named hypothesis of an operation is violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// Linking an ideal to itself (colon gives the unit ideal).
struct DegenerateLinkError : Error {
    using Error::Error;
};

/// S-pair budget for a Groebner computation was exhausted.
struct BudgetExceededError : Error {
    BudgetExceededError(const std::string& what, std::uint64_t pairs_processed)
        : Error(what), pairs(pairs_processed) {}
    std::uint64_t pairs;
};

/// Randomized search gave up after its retry budget.
struct RetryExhaustedError : Error {
    using Error::Error;
};

/// Operation not available over the requested coefficient field.
struct UnsupportedFieldError : Error {
    using Error::Error;
};

/// Ideal-file syntax error with source position.
struct ParseError : Error {
    ParseError(const std::string& what, int line_, int col_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

}  // namespace linklab

#endif
