#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pincalc {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A query reached past the degree range a ring or descriptor actually knows.
// Out-of-range data is never silently reported as zero.
struct UnsupportedDegreeError : Error {
    using Error::Error;
};

// Caller broke an API precondition (mismatched bases, wrong ring, ...).
struct MisuseError : Error {
    using Error::Error;
};

// A constructor parameter is outside the range the catalog supports.
struct UnsupportedParameterError : Error {
    using Error::Error;
};

// A search exceeded its configured cap; never a silent partial answer.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Stored ground data failed a consistency check (e.g. a singular cup
// pairing where Poincare duality demands a nondegenerate one).
struct CorruptDataError : Error {
    using Error::Error;
};

// Two independent computation routes disagreed; this is a bug, not user error.
struct InternalCheckError : Error {
    using Error::Error;
};

// Expression syntax or parameter error, with the byte offset of the problem.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : Error(what), offset(off) {}
};

}  // namespace pincalc
