#pragma once

#include <stdexcept>
#include <string>

namespace anzahl {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct MixedFields : Error {
    using Error::Error;
};

struct OrderNotSquare : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct OddSymplecticDimension : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    using Error::Error;
};

struct InvalidGram : Error {
    using Error::Error;
};

/// A q-series product was requested with b < a-1.
struct InvalidRange : Error {
    using Error::Error;
};

/// A polynomial quotient that must be exact left a remainder.
/// Internal consistency failure: must never fire on valid inputs.
struct NonExactDivision : Error {
    using Error::Error;
};

/// A summation that must produce an integer (or integer-coefficient
/// polynomial) did not. Must never fire.
struct IntegralityViolation : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

/// Symplectic beta with i != j (mod 2): the count is undefined, which is
/// distinct from an empty count.
struct UndefinedParity : Error {
    using Error::Error;
};

/// Estimated enumeration work exceeds the configured oracle budget.
struct InstanceTooLarge : Error {
    using Error::Error;
};

struct NoSuchSubspace : Error {
    using Error::Error;
};

}  // namespace anzahl
