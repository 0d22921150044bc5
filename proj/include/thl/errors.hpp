#pragma once

#include <stdexcept>
#include <string>

namespace thl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operator does not respect the submodules a quotient is taken by.
struct WellDefinednessError : Error {
    using Error::Error;
};

// d o d != 0 somewhere.
struct ComplexError : Error {
    using Error::Error;
};

struct ChainMapError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct AlgebraError : ValidationError {
    using ValidationError::ValidationError;
};

struct ActionError : ValidationError {
    using ValidationError::ValidationError;
};

struct ReducedBasisError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace thl
