#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact / minpoly
struct InvalidRadicand : Error { using Error::Error; };
struct MixedField : Error { using Error::Error; };
struct DivByZero : Error { using Error::Error; };
struct NotIrrational : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// pell
struct InvalidDiscriminant : Error { using Error::Error; };
struct NotADiscriminant : Error { using Error::Error; };

// tracegroup / algebras
struct NotPositive : Error { using Error::Error; };
struct NoTraceGroupRule : Error { using Error::Error; };
struct UnsupportedComposition : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };

// modframe
struct InvalidRank : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };

// a computed cross-check failed; indicates a bug, never user input
struct InternalInvariant : Error { using Error::Error; };

} // namespace fgc
