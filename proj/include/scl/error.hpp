#pragma once

#include <stdexcept>
#include <string>

namespace scl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph6 text or corpus input.
struct ParseError : Error {
    using Error::Error;
};

// A check was asked to run outside the parameter region where its claim applies.
struct DomainError : Error {
    using Error::Error;
};

// An exact count left the 128-bit range.
struct OverflowError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

} // namespace scl
